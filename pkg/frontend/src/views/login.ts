// Login form; a stored token enables topic title editing.

import { el } from "../dom.js";

export interface LoginHandlers {
  onLogin: (user: string, password: string) => Promise<void>;
}

export function renderLogin(handlers: LoginHandlers): HTMLElement {
  const user = el("input", { placeholder: "user", "data-testid": "login-user" });
  const password = el("input", {
    placeholder: "password",
    type: "password",
    "data-testid": "login-password",
  });
  const message = el("p", { class: "muted", "data-testid": "login-message" }, "");
  const form = el(
    "form",
    { class: "login" },
    el("h2", {}, "Sign in"),
    user,
    password,
    el("button", { type: "submit" }, "Sign in"),
    message,
  );
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    handlers.onLogin(user.value, password.value).catch((err) => {
      message.textContent = err instanceof Error ? err.message : String(err);
    });
  });
  return el("div", { class: "view login-view" }, form);
}
