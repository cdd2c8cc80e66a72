// Browser entry: wires the explorer to the DOM.  Requires the qcluster
// service running locally (default http://127.0.0.1:8777).

import { Client } from "./api.js";
import { Explorer, pinRenderText, type ViewState } from "./state.js";
import { prettyScalar, sceneFromQuiver, sceneToSvg } from "./render.js";

const SERVICE = (window as any).QCLUSTER_SERVICE ?? "http://127.0.0.1:8777";

async function boot() {
  const root = document.getElementById("app");
  if (!root) return;
  const client = new Client(SERVICE);
  const explorer = new Explorer(client);
  let state: ViewState | null = null;
  let rawJson = false;
  let busy = false; // single in-flight mutating request per session

  const controls = document.createElement("div");
  controls.innerHTML = `
    <label>type <input id="ctype" value="A2" size="3"></label>
    <label>word <input id="cword" value="121" size="8"></label>
    <button id="cload">load disk seed</button>
    <button id="cundo">undo</button>
    <button id="credo">redo</button>
    <button id="cpin">pin &kappa;(E1)</button>
    <label><input type="checkbox" id="craw"> raw JSON</label>
    <span id="cstatus"></span>
  `;
  const svgHost = document.createElement("div");
  const pinHost = document.createElement("pre");
  root.append(controls, svgHost, pinHost);

  const status = (msg: string) => {
    (document.getElementById("cstatus") as HTMLElement).textContent = msg;
  };

  function draw() {
    if (!state) return;
    const scene = sceneFromQuiver(state.server.quiver, state.layout);
    svgHost.innerHTML = sceneToSvg(scene);
    svgHost.querySelectorAll("[data-vertex]").forEach((el) => {
      el.addEventListener("click", async () => {
        if (!state || busy) return;
        const id = el.getAttribute("data-vertex")!;
        if (el.getAttribute("data-frozen") === "true") {
          status(`vertex ${id} is frozen`);
          return;
        }
        busy = true;
        try {
          state = await explorer.clickMutate(state, id);
          status(`mutated at ${id}`);
        } catch (err) {
          status(String(err));
        } finally {
          busy = false;
        }
        draw();
      });
    });
    const lines: string[] = [];
    for (const [name, pin] of Object.entries(state.server.pins)) {
      const text = pinRenderText(pin);
      const shown = rawJson ? JSON.stringify(pin) : prettyScalar(text);
      const badge = pin.status !== "ok" ? " [flagged]" : pin.positive ? " [positive]" : "";
      lines.push(`${name}${badge}: ${shown}`);
    }
    pinHost.textContent = lines.join("\n");
  }

  document.getElementById("cload")!.addEventListener("click", async () => {
    const type = (document.getElementById("ctype") as HTMLInputElement).value;
    const word = (document.getElementById("cword") as HTMLInputElement).value;
    try {
      state = await explorer.load({ type, word });
      status(`loaded ${type} / ${word}`);
    } catch (err) {
      status(String(err));
    }
    draw();
  });
  document.getElementById("cundo")!.addEventListener("click", async () => {
    if (!state || busy) return;
    busy = true;
    state = await explorer.undo(state);
    busy = false;
    draw();
  });
  document.getElementById("credo")!.addEventListener("click", async () => {
    if (!state || busy) return;
    busy = true;
    state = await explorer.redo(state);
    busy = false;
    draw();
  });
  document.getElementById("cpin")!.addEventListener("click", async () => {
    if (!state) return;
    state = await explorer.pinGenerator(state, "kappa(E1)", "E1");
    draw();
  });
  document.getElementById("craw")!.addEventListener("change", (ev) => {
    rawJson = (ev.target as HTMLInputElement).checked;
    draw();
  });
}

boot();
