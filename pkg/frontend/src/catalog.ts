/** Preloadable starting diagrams: path/branch orientations of the named
 * reflection groups, as matrix JSON the service accepts. */

export interface CatalogEntry {
  label: string;
  matrixJson: string;
}

function pathOrientation(n: number, bonds: [number, number, number, number][] = []): string {
  const b: number[][] = Array.from({ length: n }, () => Array(n).fill(0));
  for (let i = 0; i + 1 < n; i++) {
    b[i][i + 1] = 1;
    b[i + 1][i] = -1;
  }
  for (const [i, j, p, q] of bonds) {
    b[i][j] = p;
    b[j][i] = -q;
  }
  return JSON.stringify({ n, b });
}

function withSymmetrizer(matrixJson: string, d: number[]): string {
  const payload = JSON.parse(matrixJson) as { n: number; b: number[][] };
  return JSON.stringify({ ...payload, d });
}

function branched(n: number, branchFrom: number): string {
  const b: number[][] = Array.from({ length: n }, () => Array(n).fill(0));
  for (let i = 0; i + 2 < n; i++) {
    b[i][i + 1] = 1;
    b[i + 1][i] = -1;
  }
  b[branchFrom][n - 1] = 1;
  b[n - 1][branchFrom] = -1;
  return JSON.stringify({ n, b });
}

export const CATALOG: CatalogEntry[] = [
  { label: "A3", matrixJson: pathOrientation(3) },
  { label: "A4", matrixJson: pathOrientation(4) },
  {
    label: "B3",
    matrixJson: withSymmetrizer(pathOrientation(3, [[1, 2, 1, 2]]), [1, 1, 2]),
  },
  {
    label: "B4",
    matrixJson: withSymmetrizer(pathOrientation(4, [[2, 3, 1, 2]]), [1, 1, 1, 2]),
  },
  { label: "D4", matrixJson: branched(4, 1) },
  { label: "D5", matrixJson: branched(5, 2) },
  { label: "E6", matrixJson: branched(6, 2) },
  { label: "E7", matrixJson: branched(7, 2) },
  { label: "E8", matrixJson: branched(8, 2) },
];

export function catalogEntry(label: string): CatalogEntry {
  const entry = CATALOG.find((e) => e.label === label);
  if (!entry) throw new Error(`unknown catalog entry ${label}`);
  return entry;
}
