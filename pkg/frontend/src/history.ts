/** History tree of mutation sequences. Each node is a visited state; undo
 * moves to the parent but keeps the branch so it can be revisited. */

export interface HistoryNode {
  id: number;
  vertex: number | null; // mutation that produced this node; null at the root
  parent: number | null;
  children: number[];
}

export class HistoryTree {
  nodes: HistoryNode[] = [{ id: 0, vertex: null, parent: null, children: [] }];
  current = 0;

  /** Record a mutation at k; reuses the existing child when the same branch
   * was already explored. */
  push(k: number): number {
    const node = this.nodes[this.current];
    for (const c of node.children) {
      if (this.nodes[c].vertex === k) {
        this.current = c;
        return c;
      }
    }
    const id = this.nodes.length;
    this.nodes.push({ id, vertex: k, parent: node.id, children: [] });
    node.children.push(id);
    this.current = id;
    return id;
  }

  undo(): boolean {
    const parent = this.nodes[this.current].parent;
    if (parent === null) return false;
    this.current = parent;
    return true;
  }

  /** Jump to any recorded node (clicking the history tree). */
  jump(id: number): void {
    if (id < 0 || id >= this.nodes.length) throw new Error(`unknown history node ${id}`);
    this.current = id;
  }

  /** Mutation sequence from the root to a node. */
  path(id: number = this.current): number[] {
    const out: number[] = [];
    let node: HistoryNode | null = this.nodes[id];
    while (node && node.vertex !== null) {
      out.push(node.vertex);
      node = node.parent === null ? null : this.nodes[node.parent];
    }
    return out.reverse();
  }
}

export function renderHistory(tree: HistoryTree): string {
  const render = (id: number): string => {
    const node = tree.nodes[id];
    const label = node.vertex === null ? "start" : `μ${node.vertex + 1}`;
    const cls = id === tree.current ? "hnode current" : "hnode";
    const children = node.children.map(render).join("");
    return `<li class="${cls}" data-node="${id}"><span>${label}</span>${
      children ? `<ul>${children}</ul>` : ""
    }</li>`;
  };
  return `<ul class="history">${render(0)}</ul>`;
}
