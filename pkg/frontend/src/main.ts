/** Browser shell: wires the Explorer state to the DOM. All rendering goes
 * through the pure functions in render/panel/history, so everything below
 * is event plumbing. */

import { ApiClient } from "./api";
import { CATALOG, catalogEntry } from "./catalog";
import { Explorer } from "./state";

const POLL_INTERVAL_MS = 1000;

function mount(): void {
  const api = new ApiClient("", (url, init) => fetch(url, init));
  const explorer = new Explorer(api);

  const diagramHost = document.getElementById("diagram")!;
  const panelHost = document.getElementById("panel")!;
  const historyHost = document.getElementById("history")!;
  const messageHost = document.getElementById("message")!;
  const picker = document.getElementById("catalog") as HTMLSelectElement;
  const fileInput = document.getElementById("load-file") as HTMLInputElement;
  const undoButton = document.getElementById("undo")!;

  for (const entry of CATALOG) {
    const option = document.createElement("option");
    option.value = entry.label;
    option.textContent = entry.label;
    picker.appendChild(option);
  }

  let pollTimer: ReturnType<typeof setTimeout> | null = null;

  function schedulePoll(): void {
    if (pollTimer !== null) clearTimeout(pollTimer);
    if (explorer.analysis?.kind !== "pending") return;
    pollTimer = setTimeout(async () => {
      await explorer.pollPending();
      draw();
    }, POLL_INTERVAL_MS);
  }

  function draw(): void {
    diagramHost.innerHTML = explorer.svg;
    panelHost.innerHTML = explorer.panelHtml;
    historyHost.innerHTML = explorer.historyHtml;
    messageHost.textContent = explorer.message;
    if (explorer.lastMutated !== null) {
      const g = diagramHost.querySelector(`[data-vertex="${explorer.lastMutated}"]`);
      g?.classList.add("flash");
    }
    diagramHost.querySelectorAll("[data-vertex]").forEach((el) => {
      el.addEventListener("click", async () => {
        if (explorer.pendingAction) return;
        await explorer.clickVertex(Number((el as HTMLElement).dataset.vertex));
        draw();
        schedulePoll();
      });
    });
    schedulePoll();
  }

  picker.addEventListener("change", async () => {
    if (!picker.value) return;
    try {
      await explorer.load(catalogEntry(picker.value).matrixJson);
    } catch (err) {
      messageHost.textContent = String(err);
      return;
    }
    draw();
  });

  fileInput.addEventListener("change", async () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    try {
      await explorer.load(await file.text());
      messageHost.textContent = "";
    } catch (err) {
      messageHost.textContent = `could not load file: ${String(err)}`;
      return;
    }
    draw();
  });

  undoButton.addEventListener("click", async () => {
    await explorer.undo();
    draw();
  });
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", mount);
}
