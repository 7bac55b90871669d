/** Invariant panel: a flat list of label/value rows taken verbatim from the
 * analysis payload. No group theory happens here; every value is a direct
 * transcription of a service field. */

import type { AnalysisError, AnalysisReport } from "./types";

export interface PanelRow {
  label: string;
  value: string;
}

export function formatRational(r: { num: number; den: number }): string {
  return r.den === 1 ? `${r.num}` : `${r.num}/${r.den}`;
}

export function formatVolume(v: { coeff_num: number; coeff_den: number; pi_power: number }): string {
  const coeff = v.coeff_den === 1 ? `${v.coeff_num}` : `${v.coeff_num}/${v.coeff_den}`;
  return v.pi_power === 1 ? `${coeff}·π` : `${coeff}·π^${v.pi_power}`;
}

export function panelRows(report: AnalysisReport): PanelRow[] {
  const rows: PanelRow[] = [
    { label: "mutation type", value: report.mutation_type },
    {
      label: "geometric type",
      value:
        report.dimension === null
          ? report.geometric_type
          : `${report.geometric_type} (dim ${report.dimension})`,
    },
    { label: "Weyl group", value: `${report.weyl_label ?? "?"}` },
    { label: "|W|", value: `${report.group_order ?? "?"}` },
    { label: "chi_orb", value: formatRational(report.chi_orb) },
    { label: "chi", value: report.chi === null ? "—" : `${report.chi}` },
  ];
  if (report.cusps !== null) {
    rows.push({ label: "cusps", value: `${report.cusps.total}` });
  }
  if (report.compact !== null) {
    rows.push({ label: "compact", value: report.compact ? "yes" : "no" });
  }
  if (report.volume !== null) {
    rows.push({ label: "volume", value: formatVolume(report.volume) });
  }
  if (report.genus !== null) {
    rows.push({ label: "genus", value: `${report.genus}` });
  }
  rows.push({
    label: "torsion-free",
    value:
      report.torsion.torsion_free === null
        ? "inconclusive"
        : report.torsion.torsion_free
          ? "yes"
          : "no",
  });
  return rows;
}

export function unavailableRows(error: AnalysisError): PanelRow[] {
  const rows: PanelRow[] = [{ label: "analysis", value: error.error }];
  if (error.mutation_type) {
    rows.push({ label: "mutation type", value: error.mutation_type });
  }
  if (error.reason) {
    rows.push({ label: "reason", value: error.reason });
  }
  return rows;
}

export function renderPanel(rows: PanelRow[]): string {
  const cells = rows
    .map(
      (r) =>
        `<tr><th>${r.label}</th><td data-panel="${r.label}">${r.value}</td></tr>`,
    )
    .join("");
  return `<table class="panel">${cells}</table>`;
}
