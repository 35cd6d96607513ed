// Payload shapes of the /api endpoints. All numbers displayed in the UI come
// straight from these objects; the client only rounds percentages.

export interface RecentPatent {
  id: string;
  title: string;
  company: string;
  drug: string;
  granted_year: number | null;
  filed_year: number | null;
}

export interface Stats {
  total_patents: number;
  total_companies: number;
  total_molecules: number;
  total_inventors: number;
  patents_per_filed_year: Record<string, number>;
  patents_per_granted_year: Record<string, number>;
  patents_per_company: Record<string, number>;
  patents_per_molecule: Record<string, number>;
  patents_per_topic: number[];
  recent_patents: RecentPatent[];
}

export interface WordWeight {
  term: string;
  weight: number;
}

export interface TopicSummary {
  topic: number;
  title: string;
  patent_count: number;
  top_words: WordWeight[];
}

export interface TopicsResponse {
  k: number;
  top_words: number;
  topics: TopicSummary[];
}

export interface TopicPatentRow {
  id: string;
  title: string;
  company: string;
  drug: string;
  strength: string;
  granted_year: number | null;
  filed_year: number | null;
  abstract: string;
  share: number;
}

export interface TopicPatentsResponse {
  topic: number;
  title: string;
  patent_count: number;
  patents: TopicPatentRow[];
}

export interface Distribution {
  id: string;
  shares: number[];
  dominant: number;
  is_zero: boolean;
}

export interface PatentDetail {
  id: string;
  title: string;
  description: string;
  abstract: string;
  drug: string;
  company: string;
  url: string;
  strength: string;
  trade_name: string;
  inventors: string[];
  filed_year: number | null;
  granted_year: number | null;
  distribution: Distribution;
  topic: number;
  topic_title: string;
}

export interface CompanyWeight {
  name: string;
  weight: number;
}

export interface CompaniesResponse {
  per_topic: number;
  topics: { topic: number; title: string; companies: CompanyWeight[] }[];
}

export interface EntityPatentRow {
  id: string;
  title: string;
  topic: number;
  drug: string;
  company: string;
  granted_year: number | null;
  filed_year: number | null;
}

export interface EntityDetail {
  kind: "company" | "molecule" | "inventor";
  name: string;
  patent_count: number;
  patents_per_topic: Record<string, number>;
  pertinence_raw: number[];
  pertinence: number[];
  is_zero: boolean;
  patents: EntityPatentRow[];
}

export interface MoleculeSummary {
  name: string;
  patent_count: number;
  dominant_topic: number;
  shares: number[];
}

export interface MoleculesResponse {
  molecules: MoleculeSummary[];
}

export interface PairwiseShared {
  pair: string[];
  topics: number[];
}

export interface CompareResponse {
  patent_ids: string[];
  threshold: number;
  shared_topics: number[];
  pairwise_shared: PairwiseShared[];
  per_patent: Distribution[];
}

export interface WordcloudResponse {
  terms: WordWeight[];
}

export interface LoginResponse {
  token: string;
  user: string;
}
