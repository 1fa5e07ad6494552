/**
 * Parser for the tunneltimes sweep CSV format:
 * '#'-prefixed key=value metadata lines, one header row, numeric data rows.
 */

export interface SweepData {
  metadata: Record<string, string>;
  header: string[];
  columns: Record<string, number[]>;
  rows: number;
}

export class CsvError extends Error {}

export function parseSweepCsv(text: string): SweepData {
  const metadata: Record<string, string> = {};
  let header: string[] | null = null;
  const rows: number[][] = [];

  for (const raw of text.split(/\r?\n/)) {
    const line = raw.trim();
    if (line.length === 0) continue;
    if (line.startsWith("#")) {
      const body = line.slice(1).trim();
      const eq = body.indexOf("=");
      if (eq > 0) metadata[body.slice(0, eq).trim()] = body.slice(eq + 1).trim();
      continue;
    }
    if (header === null) {
      header = line.split(",").map((h) => h.trim());
      if (header.some((h) => h.length === 0)) {
        throw new CsvError("empty column name in header");
      }
      continue;
    }
    const parts = line.split(",");
    if (parts.length !== header.length) {
      throw new CsvError(
        `row has ${parts.length} fields, header has ${header.length}`,
      );
    }
    const row = parts.map((p) => Number(p));
    if (row.some((v) => !Number.isFinite(v))) {
      throw new CsvError(`non-numeric value in row: ${line}`);
    }
    rows.push(row);
  }

  if (header === null) throw new CsvError("no header row found");
  if (rows.length === 0) throw new CsvError("no data rows");

  const columns: Record<string, number[]> = {};
  header.forEach((name, i) => {
    columns[name] = rows.map((r) => r[i]);
  });
  return { metadata, header, columns, rows: rows.length };
}
