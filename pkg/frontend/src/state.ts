/** Explorer view state: orchestrates the API client, layout, rendering and
 * history. All invariants shown to the user come from the service; the
 * client only lays out and draws. */

import { ApiClient, ApiError, type AnalysisResult } from "./api";
import { forceLayout, type Point } from "./layout";
import { panelRows, renderPanel, unavailableRows } from "./panel";
import { renderDiagram } from "./render";
import { HistoryTree, renderHistory } from "./history";
import type { SessionState } from "./types";

export interface ViewOptions {
  width?: number;
  height?: number;
}

export class Explorer {
  session: SessionState | null = null;
  analysis: AnalysisResult | null = null;
  history = new HistoryTree();
  positions: Point[] = [];
  pinned = new Map<number, Point>();
  /** per-diagram layout cache: revisiting a shape redraws it identically */
  private layoutCache = new Map<string, Point[]>();
  /** vertex of the most recent mutation, for a transient UI flash */
  lastMutated: number | null = null;
  svg = "";
  panelHtml = "";
  historyHtml = "";
  message = "";
  pendingAction = false;
  private width: number;
  private height: number;

  constructor(
    private api: ApiClient,
    opts: ViewOptions = {},
  ) {
    this.width = opts.width ?? 640;
    this.height = opts.height ?? 420;
  }

  async load(matrixJson: string): Promise<void> {
    this.session = await this.api.createSession(matrixJson);
    this.history = new HistoryTree();
    this.positions = [];
    this.pinned.clear();
    this.layoutCache.clear();
    await this.refresh();
  }

  /** One in-flight mutation at a time; the UI disables vertices while a
   * click is being processed. */
  async clickVertex(k: number): Promise<void> {
    if (!this.session || this.pendingAction) return;
    this.pendingAction = true;
    try {
      this.session = await this.api.mutate(this.session.id, k);
      this.history.push(k);
      this.message = "";
      await this.refresh(k);
    } catch (err) {
      if (err instanceof ApiError) {
        this.message = this.describe(err);
      } else {
        throw err;
      }
    } finally {
      this.pendingAction = false;
    }
  }

  async undo(): Promise<void> {
    if (!this.session || this.pendingAction) return;
    this.pendingAction = true;
    try {
      this.session = await this.api.undo(this.session.id);
      this.history.undo();
      this.message = "";
      await this.refresh();
    } catch (err) {
      if (err instanceof ApiError) {
        this.message = this.describe(err);
      } else {
        throw err;
      }
    } finally {
      this.pendingAction = false;
    }
  }

  pinVertex(k: number, p: Point): void {
    this.pinned.set(k, p);
    if (this.session) {
      this.layoutCache.delete(JSON.stringify(this.session.diagram));
    }
    this.renderAll();
  }

  private describe(err: ApiError): string {
    const payload = err.payload as { error?: string; reason?: string };
    const base = payload?.error ?? `request failed (${err.status})`;
    return payload?.reason ? `${base}: ${payload.reason}` : base;
  }

  private async refresh(highlight?: number): Promise<void> {
    if (!this.session) return;
    this.layoutAndRender(highlight);
    this.analysis = await this.api.analysis(this.session.id);
    this.renderPanelOnly();
  }

  /** Resolve a pending (202) analysis by polling once; callers loop with
   * their own timer. */
  async pollPending(): Promise<boolean> {
    if (this.analysis?.kind !== "pending") return true;
    this.analysis = await this.api.pollAnalysis(this.analysis.poll);
    this.renderPanelOnly();
    return this.analysis.kind !== "pending";
  }

  private layoutAndRender(highlight?: number): void {
    const diagram = this.session!.diagram;
    const key = JSON.stringify(diagram);
    const cached = this.layoutCache.get(key);
    this.positions =
      cached ??
      forceLayout(diagram, {
        width: this.width,
        height: this.height,
        pinned: this.pinned,
        initial: this.positions,
      });
    this.layoutCache.set(key, this.positions);
    this.lastMutated = highlight ?? null;
    // the highlight flash is applied transiently by the DOM shell, so the
    // rendered state of a revisited diagram is byte-identical
    this.svg = renderDiagram(diagram, this.positions, {
      width: this.width,
      height: this.height,
    });
    this.historyHtml = renderHistory(this.history);
  }

  private renderPanelOnly(): void {
    if (!this.analysis) {
      this.panelHtml = "";
      return;
    }
    if (this.analysis.kind === "ready") {
      this.panelHtml = renderPanel(panelRows(this.analysis.report));
    } else if (this.analysis.kind === "unavailable") {
      this.panelHtml = renderPanel(unavailableRows(this.analysis.error));
    } else {
      this.panelHtml = `<div class="pending" data-poll="${this.analysis.poll}">computing…</div>`;
    }
  }

  private renderAll(): void {
    if (this.session) this.layoutAndRender();
    this.renderPanelOnly();
  }
}
