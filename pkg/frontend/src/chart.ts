/**
 * SVG line chart for sweep data.  Pure function of the parsed CSV: the
 * source values for every curve are embedded verbatim in data-x/data-y
 * attributes, so rendering is testable and lossless.
 */

import { SweepData, CsvError } from "./csv.js";

export interface ChartOptions {
  width?: number;
  height?: number;
  xColumn?: string;
  columns?: string[];
  title?: string;
}

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
const MARGIN = { top: 36, right: 24, bottom: 44, left: 64 };

function niceTicks(lo: number, hi: number, n = 6): number[] {
  if (!(hi > lo)) return [lo];
  const span = hi - lo;
  const step0 = span / Math.max(n - 1, 1);
  const mag = Math.pow(10, Math.floor(Math.log10(step0)));
  const candidates = [1, 2, 2.5, 5, 10].map((m) => m * mag);
  const step = candidates.find((s) => span / s <= n) ?? candidates[4];
  const first = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = first; v <= hi + 1e-12 * span; v += step) out.push(v);
  return out;
}

function fmt(v: number): string {
  const a = Math.abs(v);
  if (a !== 0 && (a < 1e-3 || a >= 1e4)) return v.toExponential(2);
  return String(Math.round(v * 1e6) / 1e6);
}

export function renderSvg(data: SweepData, opts: ChartOptions = {}): string {
  const width = opts.width ?? 720;
  const height = opts.height ?? 480;
  const xName = opts.xColumn ?? data.header[0];
  if (!(xName in data.columns)) throw new CsvError(`missing x column: ${xName}`);
  const yNames = opts.columns ?? data.header.filter((h) => h !== xName);
  if (yNames.length === 0) throw new CsvError("no curves requested");
  for (const name of yNames) {
    if (!(name in data.columns)) throw new CsvError(`missing column: ${name}`);
  }

  const xs = data.columns[xName];
  const allY = yNames.flatMap((n) => data.columns[n]);
  const xLo = Math.min(...xs);
  const xHi = Math.max(...xs);
  let yLo = Math.min(...allY);
  let yHi = Math.max(...allY);
  if (yLo === yHi) {
    yLo -= 0.5;
    yHi += 0.5;
  }
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const sx = (v: number) =>
    MARGIN.left + (xHi === xLo ? 0.5 : (v - xLo) / (xHi - xLo)) * plotW;
  const sy = (v: number) => MARGIN.top + (1 - (v - yLo) / (yHi - yLo)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="12">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  const title = opts.title ?? data.metadata["figure"] ?? "";
  if (title) {
    parts.push(
      `<text x="${width / 2}" y="20" text-anchor="middle" font-size="14">${title}</text>`,
    );
  }

  for (const t of niceTicks(xLo, xHi)) {
    const px = sx(t);
    parts.push(
      `<line x1="${px}" y1="${MARGIN.top}" x2="${px}" y2="${MARGIN.top + plotH}" stroke="#ddd"/>`,
      `<text x="${px}" y="${MARGIN.top + plotH + 18}" text-anchor="middle">${fmt(t)}</text>`,
    );
  }
  for (const t of niceTicks(yLo, yHi)) {
    const py = sy(t);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${py}" x2="${MARGIN.left + plotW}" y2="${py}" stroke="#ddd"/>`,
      `<text x="${MARGIN.left - 8}" y="${py + 4}" text-anchor="end">${fmt(t)}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" ` +
      `fill="none" stroke="#333"/>`,
  );
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${height - 8}" text-anchor="middle">${xName}</text>`,
  );

  yNames.forEach((name, i) => {
    const ys = data.columns[name];
    const pts = xs.map((x, j) => `${sx(x)},${sy(ys[j])}`).join(" ");
    const color = PALETTE[i % PALETTE.length];
    parts.push(
      `<polyline points="${pts}" fill="none" stroke="${color}" stroke-width="1.5" ` +
        `data-name="${name}" data-x="${xs.join(" ")}" data-y="${ys.join(" ")}"/>`,
    );
    const ly = MARGIN.top + 16 + i * 16;
    const lx = MARGIN.left + plotW - 140;
    parts.push(
      `<line x1="${lx}" y1="${ly - 4}" x2="${lx + 22}" y2="${ly - 4}" stroke="${color}" stroke-width="2"/>`,
      `<text x="${lx + 28}" y="${ly}">${name}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n");
}
