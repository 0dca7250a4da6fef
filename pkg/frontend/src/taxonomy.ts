// Client-side handling of the taxonomy file format:
//   category_path<TAB>pattern<TAB>lang<TAB>flags
// with flags a comma-set from {anchor, needs_anchor, case}. The editor
// validates records before the file is PUT back to the API.

export interface KeywordRecord {
  category_path: string[];
  pattern: string;
  lang: string;
  anchor: boolean;
  needs_anchor: boolean;
  case_sensitive: boolean;
}

export class TaxonomyFormatError extends Error {
  constructor(public line: number, message: string) {
    super(`line ${line}: ${message}`);
  }
}

const FLAG_NAMES = new Set(["anchor", "needs_anchor", "case"]);

export function parseTaxonomy(text: string): KeywordRecord[] {
  const records: KeywordRecord[] = [];
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i]!;
    if (!line.trim() || line.trim().startsWith("#")) {
      continue;
    }
    const parts = line.split("\t");
    if (parts.length !== 3 && parts.length !== 4) {
      throw new TaxonomyFormatError(i + 1, `expected 3 or 4 tab-separated fields, got ${parts.length}`);
    }
    const [rawPath, pattern, rawLang] = parts as [string, string, string];
    const flagsRaw = parts[3] ?? "";
    const flags = new Set(
      flagsRaw
        .split(",")
        .map((f) => f.trim())
        .filter((f) => f.length > 0),
    );
    for (const flag of flags) {
      if (!FLAG_NAMES.has(flag)) {
        throw new TaxonomyFormatError(i + 1, `unknown flag "${flag}"`);
      }
    }
    const category_path = rawPath
      .split("/")
      .map((p) => p.trim())
      .filter((p) => p.length > 0);
    if (!category_path.length) {
      throw new TaxonomyFormatError(i + 1, "empty category path");
    }
    records.push({
      category_path,
      pattern,
      lang: rawLang.trim() || "*",
      anchor: flags.has("anchor"),
      needs_anchor: flags.has("needs_anchor"),
      case_sensitive: flags.has("case"),
    });
  }
  return records;
}

export function serializeTaxonomy(records: KeywordRecord[]): string {
  const lines = records.map((r) => {
    const flags: string[] = [];
    if (r.anchor) flags.push("anchor");
    if (r.needs_anchor) flags.push("needs_anchor");
    if (r.case_sensitive) flags.push("case");
    return [r.category_path.join("/"), r.pattern, r.lang, flags.join(",")].join("\t");
  });
  return lines.join("\n") + "\n";
}

/** Validation problems for one record; empty array means valid. */
export function validateRecord(record: KeywordRecord): string[] {
  const problems: string[] = [];
  if (!record.category_path.length || record.category_path.some((p) => !p.trim())) {
    problems.push("category path must be non-empty");
  }
  if (!record.pattern) {
    problems.push("pattern must be non-empty");
  } else {
    try {
      new RegExp(record.pattern);
    } catch (err) {
      problems.push(`pattern does not compile: ${(err as Error).message}`);
    }
  }
  if (!record.lang) {
    problems.push("language must be a code or *");
  }
  if (record.pattern.includes("\t")) {
    problems.push("pattern must not contain tabs");
  }
  return problems;
}

export function validateAll(records: KeywordRecord[]): Map<number, string[]> {
  const problems = new Map<number, string[]>();
  records.forEach((record, i) => {
    const issues = validateRecord(record);
    if (issues.length) {
      problems.set(i, issues);
    }
  });
  return problems;
}
