// Hash-based routing so every view is deep-linkable:
//   #/topics/3, #/companies/Acme, #/molecules/x, #/patents/P1,
//   #/compare?ids=P1,P2&threshold=0.05

export type Route =
  | { name: "dashboard" }
  | { name: "topics" }
  | { name: "topic"; topic: number }
  | { name: "companies" }
  | { name: "company"; company: string }
  | { name: "molecules" }
  | { name: "molecule"; molecule: string }
  | { name: "inventor"; inventor: string }
  | { name: "patent"; id: string }
  | { name: "compare"; ids: string[]; threshold?: number }
  | { name: "login" };

export function parseHash(hash: string): Route {
  const raw = hash.replace(/^#/, "");
  const [pathPart, queryPart] = raw.split("?");
  const parts = (pathPart ?? "").split("/").filter((p) => p.length > 0);
  const query = new URLSearchParams(queryPart ?? "");

  if (parts.length === 0) return { name: "dashboard" };
  const [head, tail] = [parts[0], parts.slice(1)];
  switch (head) {
    case "topics":
      if (tail.length === 0) return { name: "topics" };
      return { name: "topic", topic: Number(tail[0]) };
    case "companies":
      if (tail.length === 0) return { name: "companies" };
      return { name: "company", company: decodeURIComponent(tail.join("/")) };
    case "molecules":
      if (tail.length === 0) return { name: "molecules" };
      return { name: "molecule", molecule: decodeURIComponent(tail.join("/")) };
    case "inventors":
      if (tail.length > 0) return { name: "inventor", inventor: decodeURIComponent(tail.join("/")) };
      return { name: "dashboard" };
    case "patents":
      if (tail.length > 0) return { name: "patent", id: decodeURIComponent(tail[0]) };
      return { name: "dashboard" };
    case "compare": {
      const ids = (query.get("ids") ?? "").split(",").filter((x) => x.length > 0);
      const thresholdRaw = query.get("threshold");
      const threshold = thresholdRaw === null ? undefined : Number(thresholdRaw);
      return { name: "compare", ids, threshold };
    }
    case "login":
      return { name: "login" };
    default:
      return { name: "dashboard" };
  }
}

export function routeHash(route: Route): string {
  switch (route.name) {
    case "dashboard":
      return "#/";
    case "topics":
      return "#/topics";
    case "topic":
      return `#/topics/${route.topic}`;
    case "companies":
      return "#/companies";
    case "company":
      return `#/companies/${encodeURIComponent(route.company)}`;
    case "molecules":
      return "#/molecules";
    case "molecule":
      return `#/molecules/${encodeURIComponent(route.molecule)}`;
    case "inventor":
      return `#/inventors/${encodeURIComponent(route.inventor)}`;
    case "patent":
      return `#/patents/${encodeURIComponent(route.id)}`;
    case "compare": {
      const base = `#/compare?ids=${route.ids.map(encodeURIComponent).join(",")}`;
      return route.threshold === undefined ? base : `${base}&threshold=${route.threshold}`;
    }
    case "login":
      return "#/login";
  }
}
