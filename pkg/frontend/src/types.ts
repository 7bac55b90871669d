/** Wire types of the toolkit HTTP API. The client never computes any of
 * these values itself; it only displays what the service returns. */

export interface MatrixPayload {
  n: number;
  b: number[][];
  d?: number[];
}

export interface DiagramPayload {
  n: number;
  /** [from, to, weight] triples */
  edges: [number, number, number][];
}

export interface SessionState {
  id: string;
  matrix: MatrixPayload;
  diagram: DiagramPayload;
  history: number[];
  canonical_key: string;
}

export interface Rational {
  num: number;
  den: number;
}

export interface TorsionEntryPayload {
  subset: number[];
  classified_order: number;
  image_order: number | null;
  equal: boolean;
}

export interface TorsionPayload {
  entries: TorsionEntryPayload[];
  torsion_free: boolean | null;
  note: string;
}

export interface CuspsPayload {
  classes: { subset: number[]; stabilizer_order: number; count: number }[];
  total: number;
}

export interface VolumePayload {
  coeff_num: number;
  coeff_den: number;
  pi_power: number;
}

export interface AnalysisReport {
  geometric_type: string;
  dimension: number | null;
  signature: [number, number, number];
  weyl_label: string | null;
  group_order: number | null;
  chi_orb: Rational;
  chi: number | null;
  compact: boolean | null;
  genus: number | null;
  torsion: TorsionPayload;
  cusps: CuspsPayload | null;
  volume: VolumePayload | null;
  mutation_type: string;
  canonical_key: string;
}

export interface AnalysisError {
  error: string;
  reason?: string;
  mutation_type?: string;
  canonical_key?: string;
}

export interface PendingAnalysis {
  status: "pending";
  poll: string;
  canonical_key: string;
}
