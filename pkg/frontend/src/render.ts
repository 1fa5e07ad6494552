#!/usr/bin/env node
/**
 * CLI: render <input.csv> <output.svg> [--columns a,b,c]
 *
 * Reads a sweep CSV and writes an SVG line chart.  Exits nonzero with a
 * message on bad usage, unreadable input, malformed CSV, or unknown
 * columns; on failure no output file is written.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { parseSweepCsv, CsvError } from "./csv.js";
import { renderSvg } from "./chart.js";

export interface CliArgs {
  input: string;
  output: string;
  columns?: string[];
}

export function parseArgs(argv: string[]): CliArgs {
  const positional: string[] = [];
  let columns: string[] | undefined;
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "--columns") {
      const value = argv[++i];
      if (value === undefined) throw new CsvError("--columns needs a value");
      columns = value.split(",").map((c) => c.trim()).filter((c) => c.length > 0);
      if (columns.length === 0) throw new CsvError("--columns list is empty");
    } else if (arg.startsWith("--")) {
      throw new CsvError(`unknown option: ${arg}`);
    } else {
      positional.push(arg);
    }
  }
  if (positional.length !== 2) {
    throw new CsvError("usage: render <input.csv> <output.svg> [--columns a,b,c]");
  }
  return { input: positional[0], output: positional[1], columns };
}

export function run(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
  let text: string;
  try {
    text = readFileSync(args.input, "utf-8");
  } catch (err) {
    console.error(`error: cannot read ${args.input}: ${(err as Error).message}`);
    return 2;
  }
  let svg: string;
  try {
    svg = renderSvg(parseSweepCsv(text), { columns: args.columns });
  } catch (err) {
    if (err instanceof CsvError) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
  writeFileSync(args.output, svg + "\n", "utf-8");
  return 0;
}

const entry = process.argv[1];
if (entry !== undefined && import.meta.url === new URL(`file://${entry}`).href) {
  process.exit(run(process.argv.slice(2)));
}
