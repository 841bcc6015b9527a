import { Client } from "./api";
import { App } from "./app";
import "./style.css";

function serviceBaseUrl(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("service") ?? "http://127.0.0.1:8750";
}

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");
new App(root, new Client(serviceBaseUrl()));
