import { describe, expect, it } from "vitest";

import { HistoryTree, renderHistory } from "../src/history";

describe("HistoryTree", () => {
  it("grows a node per mutation and tracks the path", () => {
    const tree = new HistoryTree();
    tree.push(2);
    tree.push(0);
    expect(tree.path()).toEqual([2, 0]);
    expect(tree.nodes).toHaveLength(3);
  });

  it("undo moves to the parent but keeps the branch", () => {
    const tree = new HistoryTree();
    tree.push(1);
    expect(tree.undo()).toBe(true);
    expect(tree.path()).toEqual([]);
    expect(tree.nodes).toHaveLength(2);
    expect(tree.undo()).toBe(false);
  });

  it("re-clicking an explored branch reuses its node", () => {
    const tree = new HistoryTree();
    tree.push(1);
    tree.undo();
    tree.push(1);
    expect(tree.nodes).toHaveLength(2);
    expect(tree.path()).toEqual([1]);
  });

  it("jump restores any recorded state", () => {
    const tree = new HistoryTree();
    tree.push(0);
    tree.push(1);
    tree.jump(0);
    tree.push(2);
    expect(tree.path()).toEqual([2]);
    expect(tree.nodes[0].children).toHaveLength(2);
    expect(() => tree.jump(99)).toThrow();
  });

  it("renders the tree with the current node marked", () => {
    const tree = new HistoryTree();
    tree.push(1);
    const html = renderHistory(tree);
    expect(html).toContain("start");
    expect(html).toContain("μ2");
    expect(html).toContain('class="hnode current" data-node="1"');
  });
});
