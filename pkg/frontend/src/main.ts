import { Explorer } from "./explorer.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");
const base = new URLSearchParams(window.location.search).get("service") ?? undefined;
new Explorer(root, base ?? undefined);
