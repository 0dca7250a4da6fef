// test/taxonomy.test.ts
import assert from "node:assert/strict";
import { test } from "node:test";

// src/taxonomy.ts
var TaxonomyFormatError = class extends Error {
  constructor(line, message) {
    super(`line ${line}: ${message}`);
    this.line = line;
  }
};
var FLAG_NAMES = /* @__PURE__ */ new Set(["anchor", "needs_anchor", "case"]);
function parseTaxonomy(text) {
  const records = [];
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i];
    if (!line.trim() || line.trim().startsWith("#")) {
      continue;
    }
    const parts = line.split("	");
    if (parts.length !== 3 && parts.length !== 4) {
      throw new TaxonomyFormatError(i + 1, `expected 3 or 4 tab-separated fields, got ${parts.length}`);
    }
    const [rawPath, pattern, rawLang] = parts;
    const flagsRaw = parts[3] ?? "";
    const flags = new Set(
      flagsRaw.split(",").map((f) => f.trim()).filter((f) => f.length > 0)
    );
    for (const flag of flags) {
      if (!FLAG_NAMES.has(flag)) {
        throw new TaxonomyFormatError(i + 1, `unknown flag "${flag}"`);
      }
    }
    const category_path = rawPath.split("/").map((p) => p.trim()).filter((p) => p.length > 0);
    if (!category_path.length) {
      throw new TaxonomyFormatError(i + 1, "empty category path");
    }
    records.push({
      category_path,
      pattern,
      lang: rawLang.trim() || "*",
      anchor: flags.has("anchor"),
      needs_anchor: flags.has("needs_anchor"),
      case_sensitive: flags.has("case")
    });
  }
  return records;
}
function serializeTaxonomy(records) {
  const lines = records.map((r) => {
    const flags = [];
    if (r.anchor) flags.push("anchor");
    if (r.needs_anchor) flags.push("needs_anchor");
    if (r.case_sensitive) flags.push("case");
    return [r.category_path.join("/"), r.pattern, r.lang, flags.join(",")].join("	");
  });
  return lines.join("\n") + "\n";
}
function validateRecord(record) {
  const problems = [];
  if (!record.category_path.length || record.category_path.some((p) => !p.trim())) {
    problems.push("category path must be non-empty");
  }
  if (!record.pattern) {
    problems.push("pattern must be non-empty");
  } else {
    try {
      new RegExp(record.pattern);
    } catch (err) {
      problems.push(`pattern does not compile: ${err.message}`);
    }
  }
  if (!record.lang) {
    problems.push("language must be a code or *");
  }
  if (record.pattern.includes("	")) {
    problems.push("pattern must not contain tabs");
  }
  return problems;
}
function validateAll(records) {
  const problems = /* @__PURE__ */ new Map();
  records.forEach((record, i) => {
    const issues = validateRecord(record);
    if (issues.length) {
      problems.set(i, issues);
    }
  });
  return problems;
}

// test/taxonomy.test.ts
var SAMPLE = "# keywords\npolitics/podemos	\\bPodemos\\b	es	case,needs_anchor\npolitics/pnv	\\bPNV\\b	*	\n_anchor_	\\belecciones\\b	es	anchor\n";
test("parse reads records, flags and comments", () => {
  const records = parseTaxonomy(SAMPLE);
  assert.equal(records.length, 3);
  assert.deepEqual(records[0].category_path, ["politics", "podemos"]);
  assert.equal(records[0].case_sensitive, true);
  assert.equal(records[0].needs_anchor, true);
  assert.equal(records[1].lang, "*");
  assert.equal(records[2].anchor, true);
});
test("serialize/parse round-trip preserves records", () => {
  const records = parseTaxonomy(SAMPLE);
  assert.deepEqual(parseTaxonomy(serializeTaxonomy(records)), records);
});
test("unknown flag rejected with line number", () => {
  assert.throws(
    () => parseTaxonomy("a/b	x	es	bogus\n"),
    (err) => err instanceof TaxonomyFormatError && err.line === 1
  );
});
test("wrong column count rejected", () => {
  assert.throws(() => parseTaxonomy("just-one-column\n"), TaxonomyFormatError);
});
test("empty category path rejected", () => {
  assert.throws(() => parseTaxonomy("	pat	es	\n"), TaxonomyFormatError);
});
test("validateRecord flags bad regex and empty fields", () => {
  const good = parseTaxonomy(SAMPLE)[0];
  assert.deepEqual(validateRecord(good), []);
  const badRegex = { ...good, pattern: "(" };
  assert.ok(validateRecord(badRegex).some((p) => p.includes("does not compile")));
  const emptyPattern = { ...good, pattern: "" };
  assert.ok(validateRecord(emptyPattern).length > 0);
});
test("validateAll indexes problems by record", () => {
  const records = parseTaxonomy(SAMPLE);
  records[1] = { ...records[1], pattern: "(" };
  const problems = validateAll(records);
  assert.deepEqual([...problems.keys()], [1]);
});
//# sourceMappingURL=data:application/json;base64,ewogICJ2ZXJzaW9uIjogMywKICAic291cmNlcyI6IFsiLi4vdGVzdC90YXhvbm9teS50ZXN0LnRzIiwgIi4uL3NyYy90YXhvbm9teS50cyJdLAogICJzb3VyY2VzQ29udGVudCI6IFsiaW1wb3J0IGFzc2VydCBmcm9tIFwibm9kZTphc3NlcnQvc3RyaWN0XCI7XG5pbXBvcnQgeyB0ZXN0IH0gZnJvbSBcIm5vZGU6dGVzdFwiO1xuaW1wb3J0IHtcbiAgVGF4b25vbXlGb3JtYXRFcnJvcixcbiAgcGFyc2VUYXhvbm9teSxcbiAgc2VyaWFsaXplVGF4b25vbXksXG4gIHZhbGlkYXRlQWxsLFxuICB2YWxpZGF0ZVJlY29yZCxcbn0gZnJvbSBcIi4uL3NyYy90YXhvbm9teS5qc1wiO1xuXG5jb25zdCBTQU1QTEUgPVxuICBcIiMga2V5d29yZHNcXG5cIiArXG4gIFwicG9saXRpY3MvcG9kZW1vc1xcdFxcXFxiUG9kZW1vc1xcXFxiXFx0ZXNcXHRjYXNlLG5lZWRzX2FuY2hvclxcblwiICtcbiAgXCJwb2xpdGljcy9wbnZcXHRcXFxcYlBOVlxcXFxiXFx0KlxcdFxcblwiICtcbiAgXCJfYW5jaG9yX1xcdFxcXFxiZWxlY2Npb25lc1xcXFxiXFx0ZXNcXHRhbmNob3JcXG5cIjtcblxudGVzdChcInBhcnNlIHJlYWRzIHJlY29yZHMsIGZsYWdzIGFuZCBjb21tZW50c1wiLCAoKSA9PiB7XG4gIGNvbnN0IHJlY29yZHMgPSBwYXJzZVRheG9ub215KFNBTVBMRSk7XG4gIGFzc2VydC5lcXVhbChyZWNvcmRzLmxlbmd0aCwgMyk7XG4gIGFzc2VydC5kZWVwRXF1YWwocmVjb3Jkc1swXSEuY2F0ZWdvcnlfcGF0aCwgW1wicG9saXRpY3NcIiwgXCJwb2RlbW9zXCJdKTtcbiAgYXNzZXJ0LmVxdWFsKHJlY29yZHNbMF0hLmNhc2Vfc2Vuc2l0aXZlLCB0cnVlKTtcbiAgYXNzZXJ0LmVxdWFsKHJlY29yZHNbMF0hLm5lZWRzX2FuY2hvciwgdHJ1ZSk7XG4gIGFzc2VydC5lcXVhbChyZWNvcmRzWzFdIS5sYW5nLCBcIipcIik7XG4gIGFzc2VydC5lcXVhbChyZWNvcmRzWzJdIS5hbmNob3IsIHRydWUpO1xufSk7XG5cbnRlc3QoXCJzZXJpYWxpemUvcGFyc2Ugcm91bmQtdHJpcCBwcmVzZXJ2ZXMgcmVjb3Jkc1wiLCAoKSA9PiB7XG4gIGNvbnN0IHJlY29yZHMgPSBwYXJzZVRheG9ub215KFNBTVBMRSk7XG4gIGFzc2VydC5kZWVwRXF1YWwocGFyc2VUYXhvbm9teShzZXJpYWxpemVUYXhvbm9teShyZWNvcmRzKSksIHJlY29yZHMpO1xufSk7XG5cbnRlc3QoXCJ1bmtub3duIGZsYWcgcmVqZWN0ZWQgd2l0aCBsaW5lIG51bWJlclwiLCAoKSA9PiB7XG4gIGFzc2VydC50aHJvd3MoXG4gICAgKCkgPT4gcGFyc2VUYXhvbm9teShcImEvYlxcdHhcXHRlc1xcdGJvZ3VzXFxuXCIpLFxuICAgIChlcnI6IHVua25vd24pID0+IGVyciBpbnN0YW5jZW9mIFRheG9ub215Rm9ybWF0RXJyb3IgJiYgZXJyLmxpbmUgPT09IDEsXG4gICk7XG59KTtcblxudGVzdChcIndyb25nIGNvbHVtbiBjb3VudCByZWplY3RlZFwiLCAoKSA9PiB7XG4gIGFzc2VydC50aHJvd3MoKCkgPT4gcGFyc2VUYXhvbm9teShcImp1c3Qtb25lLWNvbHVtblxcblwiKSwgVGF4b25vbXlGb3JtYXRFcnJvcik7XG59KTtcblxudGVzdChcImVtcHR5IGNhdGVnb3J5IHBhdGggcmVqZWN0ZWRcIiwgKCkgPT4ge1xuICBhc3NlcnQudGhyb3dzKCgpID0+IHBhcnNlVGF4b25vbXkoXCJcXHRwYXRcXHRlc1xcdFxcblwiKSwgVGF4b25vbXlGb3JtYXRFcnJvcik7XG59KTtcblxudGVzdChcInZhbGlkYXRlUmVjb3JkIGZsYWdzIGJhZCByZWdleCBhbmQgZW1wdHkgZmllbGRzXCIsICgpID0+IHtcbiAgY29uc3QgZ29vZCA9IHBhcnNlVGF4b25vbXkoU0FNUExFKVswXSE7XG4gIGFzc2VydC5kZWVwRXF1YWwodmFsaWRhdGVSZWNvcmQoZ29vZCksIFtdKTtcbiAgY29uc3QgYmFkUmVnZXggPSB7IC4uLmdvb2QsIHBhdHRlcm46IFwiKFwiIH07XG4gIGFzc2VydC5vayh2YWxpZGF0ZVJlY29yZChiYWRSZWdleCkuc29tZSgocCkgPT4gcC5pbmNsdWRlcyhcImRvZXMgbm90IGNvbXBpbGVcIikpKTtcbiAgY29uc3QgZW1wdHlQYXR0ZXJuID0geyAuLi5nb29kLCBwYXR0ZXJuOiBcIlwiIH07XG4gIGFzc2VydC5vayh2YWxpZGF0ZVJlY29yZChlbXB0eVBhdHRlcm4pLmxlbmd0aCA+IDApO1xufSk7XG5cbnRlc3QoXCJ2YWxpZGF0ZUFsbCBpbmRleGVzIHByb2JsZW1zIGJ5IHJlY29yZFwiLCAoKSA9PiB7XG4gIGNvbnN0IHJlY29yZHMgPSBwYXJzZVRheG9ub215KFNBTVBMRSk7XG4gIHJlY29yZHNbMV0gPSB7IC4uLnJlY29yZHNbMV0hLCBwYXR0ZXJuOiBcIihcIiB9O1xuICBjb25zdCBwcm9ibGVtcyA9IHZhbGlkYXRlQWxsKHJlY29yZHMpO1xuICBhc3NlcnQuZGVlcEVxdWFsKFsuLi5wcm9ibGVtcy5rZXlzKCldLCBbMV0pO1xufSk7XG4iLCAiLy8gQ2xpZW50LXNpZGUgaGFuZGxpbmcgb2YgdGhlIHRheG9ub215IGZpbGUgZm9ybWF0OlxuLy8gICBjYXRlZ29yeV9wYXRoPFRBQj5wYXR0ZXJuPFRBQj5sYW5nPFRBQj5mbGFnc1xuLy8gd2l0aCBmbGFncyBhIGNvbW1hLXNldCBmcm9tIHthbmNob3IsIG5lZWRzX2FuY2hvciwgY2FzZX0uIFRoZSBlZGl0b3Jcbi8vIHZhbGlkYXRlcyByZWNvcmRzIGJlZm9yZSB0aGUgZmlsZSBpcyBQVVQgYmFjayB0byB0aGUgQVBJLlxuXG5leHBvcnQgaW50ZXJmYWNlIEtleXdvcmRSZWNvcmQge1xuICBjYXRlZ29yeV9wYXRoOiBzdHJpbmdbXTtcbiAgcGF0dGVybjogc3RyaW5nO1xuICBsYW5nOiBzdHJpbmc7XG4gIGFuY2hvcjogYm9vbGVhbjtcbiAgbmVlZHNfYW5jaG9yOiBib29sZWFuO1xuICBjYXNlX3NlbnNpdGl2ZTogYm9vbGVhbjtcbn1cblxuZXhwb3J0IGNsYXNzIFRheG9ub215Rm9ybWF0RXJyb3IgZXh0ZW5kcyBFcnJvciB7XG4gIGNvbnN0cnVjdG9yKHB1YmxpYyBsaW5lOiBudW1iZXIsIG1lc3NhZ2U6IHN0cmluZykge1xuICAgIHN1cGVyKGBsaW5lICR7bGluZX06ICR7bWVzc2FnZX1gKTtcbiAgfVxufVxuXG5jb25zdCBGTEFHX05BTUVTID0gbmV3IFNldChbXCJhbmNob3JcIiwgXCJuZWVkc19hbmNob3JcIiwgXCJjYXNlXCJdKTtcblxuZXhwb3J0IGZ1bmN0aW9uIHBhcnNlVGF4b25vbXkodGV4dDogc3RyaW5nKTogS2V5d29yZFJlY29yZFtdIHtcbiAgY29uc3QgcmVjb3JkczogS2V5d29yZFJlY29yZFtdID0gW107XG4gIGNvbnN0IGxpbmVzID0gdGV4dC5zcGxpdChcIlxcblwiKTtcbiAgZm9yIChsZXQgaSA9IDA7IGkgPCBsaW5lcy5sZW5ndGg7IGkrKykge1xuICAgIGNvbnN0IGxpbmUgPSBsaW5lc1tpXSE7XG4gICAgaWYgKCFsaW5lLnRyaW0oKSB8fCBsaW5lLnRyaW0oKS5zdGFydHNXaXRoKFwiI1wiKSkge1xuICAgICAgY29udGludWU7XG4gICAgfVxuICAgIGNvbnN0IHBhcnRzID0gbGluZS5zcGxpdChcIlxcdFwiKTtcbiAgICBpZiAocGFydHMubGVuZ3RoICE9PSAzICYmIHBhcnRzLmxlbmd0aCAhPT0gNCkge1xuICAgICAgdGhyb3cgbmV3IFRheG9ub215Rm9ybWF0RXJyb3IoaSArIDEsIGBleHBlY3RlZCAzIG9yIDQgdGFiLXNlcGFyYXRlZCBmaWVsZHMsIGdvdCAke3BhcnRzLmxlbmd0aH1gKTtcbiAgICB9XG4gICAgY29uc3QgW3Jhd1BhdGgsIHBhdHRlcm4sIHJhd0xhbmddID0gcGFydHMgYXMgW3N0cmluZywgc3RyaW5nLCBzdHJpbmddO1xuICAgIGNvbnN0IGZsYWdzUmF3ID0gcGFydHNbM10gPz8gXCJcIjtcbiAgICBjb25zdCBmbGFncyA9IG5ldyBTZXQoXG4gICAgICBmbGFnc1Jhd1xuICAgICAgICAuc3BsaXQoXCIsXCIpXG4gICAgICAgIC5tYXAoKGYpID0+IGYudHJpbSgpKVxuICAgICAgICAuZmlsdGVyKChmKSA9PiBmLmxlbmd0aCA+IDApLFxuICAgICk7XG4gICAgZm9yIChjb25zdCBmbGFnIG9mIGZsYWdzKSB7XG4gICAgICBpZiAoIUZMQUdfTkFNRVMuaGFzKGZsYWcpKSB7XG4gICAgICAgIHRocm93IG5ldyBUYXhvbm9teUZvcm1hdEVycm9yKGkgKyAxLCBgdW5rbm93biBmbGFnIFwiJHtmbGFnfVwiYCk7XG4gICAgICB9XG4gICAgfVxuICAgIGNvbnN0IGNhdGVnb3J5X3BhdGggPSByYXdQYXRoXG4gICAgICAuc3BsaXQoXCIvXCIpXG4gICAgICAubWFwKChwKSA9PiBwLnRyaW0oKSlcbiAgICAgIC5maWx0ZXIoKHApID0+IHAubGVuZ3RoID4gMCk7XG4gICAgaWYgKCFjYXRlZ29yeV9wYXRoLmxlbmd0aCkge1xuICAgICAgdGhyb3cgbmV3IFRheG9ub215Rm9ybWF0RXJyb3IoaSArIDEsIFwiZW1wdHkgY2F0ZWdvcnkgcGF0aFwiKTtcbiAgICB9XG4gICAgcmVjb3Jkcy5wdXNoKHtcbiAgICAgIGNhdGVnb3J5X3BhdGgsXG4gICAgICBwYXR0ZXJuLFxuICAgICAgbGFuZzogcmF3TGFuZy50cmltKCkgfHwgXCIqXCIsXG4gICAgICBhbmNob3I6IGZsYWdzLmhhcyhcImFuY2hvclwiKSxcbiAgICAgIG5lZWRzX2FuY2hvcjogZmxhZ3MuaGFzKFwibmVlZHNfYW5jaG9yXCIpLFxuICAgICAgY2FzZV9zZW5zaXRpdmU6IGZsYWdzLmhhcyhcImNhc2VcIiksXG4gICAgfSk7XG4gIH1cbiAgcmV0dXJuIHJlY29yZHM7XG59XG5cbmV4cG9ydCBmdW5jdGlvbiBzZXJpYWxpemVUYXhvbm9teShyZWNvcmRzOiBLZXl3b3JkUmVjb3JkW10pOiBzdHJpbmcge1xuICBjb25zdCBsaW5lcyA9IHJlY29yZHMubWFwKChyKSA9PiB7XG4gICAgY29uc3QgZmxhZ3M6IHN0cmluZ1tdID0gW107XG4gICAgaWYgKHIuYW5jaG9yKSBmbGFncy5wdXNoKFwiYW5jaG9yXCIpO1xuICAgIGlmIChyLm5lZWRzX2FuY2hvcikgZmxhZ3MucHVzaChcIm5lZWRzX2FuY2hvclwiKTtcbiAgICBpZiAoci5jYXNlX3NlbnNpdGl2ZSkgZmxhZ3MucHVzaChcImNhc2VcIik7XG4gICAgcmV0dXJuIFtyLmNhdGVnb3J5X3BhdGguam9pbihcIi9cIiksIHIucGF0dGVybiwgci5sYW5nLCBmbGFncy5qb2luKFwiLFwiKV0uam9pbihcIlxcdFwiKTtcbiAgfSk7XG4gIHJldHVybiBsaW5lcy5qb2luKFwiXFxuXCIpICsgXCJcXG5cIjtcbn1cblxuLyoqIFZhbGlkYXRpb24gcHJvYmxlbXMgZm9yIG9uZSByZWNvcmQ7IGVtcHR5IGFycmF5IG1lYW5zIHZhbGlkLiAqL1xuZXhwb3J0IGZ1bmN0aW9uIHZhbGlkYXRlUmVjb3JkKHJlY29yZDogS2V5d29yZFJlY29yZCk6IHN0cmluZ1tdIHtcbiAgY29uc3QgcHJvYmxlbXM6IHN0cmluZ1tdID0gW107XG4gIGlmICghcmVjb3JkLmNhdGVnb3J5X3BhdGgubGVuZ3RoIHx8IHJlY29yZC5jYXRlZ29yeV9wYXRoLnNvbWUoKHApID0+ICFwLnRyaW0oKSkpIHtcbiAgICBwcm9ibGVtcy5wdXNoKFwiY2F0ZWdvcnkgcGF0aCBtdXN0IGJlIG5vbi1lbXB0eVwiKTtcbiAgfVxuICBpZiAoIXJlY29yZC5wYXR0ZXJuKSB7XG4gICAgcHJvYmxlbXMucHVzaChcInBhdHRlcm4gbXVzdCBiZSBub24tZW1wdHlcIik7XG4gIH0gZWxzZSB7XG4gICAgdHJ5IHtcbiAgICAgIG5ldyBSZWdFeHAocmVjb3JkLnBhdHRlcm4pO1xuICAgIH0gY2F0Y2ggKGVycikge1xuICAgICAgcHJvYmxlbXMucHVzaChgcGF0dGVybiBkb2VzIG5vdCBjb21waWxlOiAkeyhlcnIgYXMgRXJyb3IpLm1lc3NhZ2V9YCk7XG4gICAgfVxuICB9XG4gIGlmICghcmVjb3JkLmxhbmcpIHtcbiAgICBwcm9ibGVtcy5wdXNoKFwibGFuZ3VhZ2UgbXVzdCBiZSBhIGNvZGUgb3IgKlwiKTtcbiAgfVxuICBpZiAocmVjb3JkLnBhdHRlcm4uaW5jbHVkZXMoXCJcXHRcIikpIHtcbiAgICBwcm9ibGVtcy5wdXNoKFwicGF0dGVybiBtdXN0IG5vdCBjb250YWluIHRhYnNcIik7XG4gIH1cbiAgcmV0dXJuIHByb2JsZW1zO1xufVxuXG5leHBvcnQgZnVuY3Rpb24gdmFsaWRhdGVBbGwocmVjb3JkczogS2V5d29yZFJlY29yZFtdKTogTWFwPG51bWJlciwgc3RyaW5nW10+IHtcbiAgY29uc3QgcHJvYmxlbXMgPSBuZXcgTWFwPG51bWJlciwgc3RyaW5nW10+KCk7XG4gIHJlY29yZHMuZm9yRWFjaCgocmVjb3JkLCBpKSA9PiB7XG4gICAgY29uc3QgaXNzdWVzID0gdmFsaWRhdGVSZWNvcmQocmVjb3JkKTtcbiAgICBpZiAoaXNzdWVzLmxlbmd0aCkge1xuICAgICAgcHJvYmxlbXMuc2V0KGksIGlzc3Vlcyk7XG4gICAgfVxuICB9KTtcbiAgcmV0dXJuIHByb2JsZW1zO1xufVxuIl0sCiAgIm1hcHBpbmdzIjogIjtBQUFBLE9BQU8sWUFBWTtBQUNuQixTQUFTLFlBQVk7OztBQ2FkLElBQU0sc0JBQU4sY0FBa0MsTUFBTTtBQUFBLEVBQzdDLFlBQW1CLE1BQWMsU0FBaUI7QUFDaEQsVUFBTSxRQUFRLElBQUksS0FBSyxPQUFPLEVBQUU7QUFEZjtBQUFBLEVBRW5CO0FBQ0Y7QUFFQSxJQUFNLGFBQWEsb0JBQUksSUFBSSxDQUFDLFVBQVUsZ0JBQWdCLE1BQU0sQ0FBQztBQUV0RCxTQUFTLGNBQWMsTUFBK0I7QUFDM0QsUUFBTSxVQUEyQixDQUFDO0FBQ2xDLFFBQU0sUUFBUSxLQUFLLE1BQU0sSUFBSTtBQUM3QixXQUFTLElBQUksR0FBRyxJQUFJLE1BQU0sUUFBUSxLQUFLO0FBQ3JDLFVBQU0sT0FBTyxNQUFNLENBQUM7QUFDcEIsUUFBSSxDQUFDLEtBQUssS0FBSyxLQUFLLEtBQUssS0FBSyxFQUFFLFdBQVcsR0FBRyxHQUFHO0FBQy9DO0FBQUEsSUFDRjtBQUNBLFVBQU0sUUFBUSxLQUFLLE1BQU0sR0FBSTtBQUM3QixRQUFJLE1BQU0sV0FBVyxLQUFLLE1BQU0sV0FBVyxHQUFHO0FBQzVDLFlBQU0sSUFBSSxvQkFBb0IsSUFBSSxHQUFHLDZDQUE2QyxNQUFNLE1BQU0sRUFBRTtBQUFBLElBQ2xHO0FBQ0EsVUFBTSxDQUFDLFNBQVMsU0FBUyxPQUFPLElBQUk7QUFDcEMsVUFBTSxXQUFXLE1BQU0sQ0FBQyxLQUFLO0FBQzdCLFVBQU0sUUFBUSxJQUFJO0FBQUEsTUFDaEIsU0FDRyxNQUFNLEdBQUcsRUFDVCxJQUFJLENBQUMsTUFBTSxFQUFFLEtBQUssQ0FBQyxFQUNuQixPQUFPLENBQUMsTUFBTSxFQUFFLFNBQVMsQ0FBQztBQUFBLElBQy9CO0FBQ0EsZUFBVyxRQUFRLE9BQU87QUFDeEIsVUFBSSxDQUFDLFdBQVcsSUFBSSxJQUFJLEdBQUc7QUFDekIsY0FBTSxJQUFJLG9CQUFvQixJQUFJLEdBQUcsaUJBQWlCLElBQUksR0FBRztBQUFBLE1BQy9EO0FBQUEsSUFDRjtBQUNBLFVBQU0sZ0JBQWdCLFFBQ25CLE1BQU0sR0FBRyxFQUNULElBQUksQ0FBQyxNQUFNLEVBQUUsS0FBSyxDQUFDLEVBQ25CLE9BQU8sQ0FBQyxNQUFNLEVBQUUsU0FBUyxDQUFDO0FBQzdCLFFBQUksQ0FBQyxjQUFjLFFBQVE7QUFDekIsWUFBTSxJQUFJLG9CQUFvQixJQUFJLEdBQUcscUJBQXFCO0FBQUEsSUFDNUQ7QUFDQSxZQUFRLEtBQUs7QUFBQSxNQUNYO0FBQUEsTUFDQTtBQUFBLE1BQ0EsTUFBTSxRQUFRLEtBQUssS0FBSztBQUFBLE1BQ3hCLFFBQVEsTUFBTSxJQUFJLFFBQVE7QUFBQSxNQUMxQixjQUFjLE1BQU0sSUFBSSxjQUFjO0FBQUEsTUFDdEMsZ0JBQWdCLE1BQU0sSUFBSSxNQUFNO0FBQUEsSUFDbEMsQ0FBQztBQUFBLEVBQ0g7QUFDQSxTQUFPO0FBQ1Q7QUFFTyxTQUFTLGtCQUFrQixTQUFrQztBQUNsRSxRQUFNLFFBQVEsUUFBUSxJQUFJLENBQUMsTUFBTTtBQUMvQixVQUFNLFFBQWtCLENBQUM7QUFDekIsUUFBSSxFQUFFLE9BQVEsT0FBTSxLQUFLLFFBQVE7QUFDakMsUUFBSSxFQUFFLGFBQWMsT0FBTSxLQUFLLGNBQWM7QUFDN0MsUUFBSSxFQUFFLGVBQWdCLE9BQU0sS0FBSyxNQUFNO0FBQ3ZDLFdBQU8sQ0FBQyxFQUFFLGNBQWMsS0FBSyxHQUFHLEdBQUcsRUFBRSxTQUFTLEVBQUUsTUFBTSxNQUFNLEtBQUssR0FBRyxDQUFDLEVBQUUsS0FBSyxHQUFJO0FBQUEsRUFDbEYsQ0FBQztBQUNELFNBQU8sTUFBTSxLQUFLLElBQUksSUFBSTtBQUM1QjtBQUdPLFNBQVMsZUFBZSxRQUFpQztBQUM5RCxRQUFNLFdBQXFCLENBQUM7QUFDNUIsTUFBSSxDQUFDLE9BQU8sY0FBYyxVQUFVLE9BQU8sY0FBYyxLQUFLLENBQUMsTUFBTSxDQUFDLEVBQUUsS0FBSyxDQUFDLEdBQUc7QUFDL0UsYUFBUyxLQUFLLGlDQUFpQztBQUFBLEVBQ2pEO0FBQ0EsTUFBSSxDQUFDLE9BQU8sU0FBUztBQUNuQixhQUFTLEtBQUssMkJBQTJCO0FBQUEsRUFDM0MsT0FBTztBQUNMLFFBQUk7QUFDRixVQUFJLE9BQU8sT0FBTyxPQUFPO0FBQUEsSUFDM0IsU0FBUyxLQUFLO0FBQ1osZUFBUyxLQUFLLDZCQUE4QixJQUFjLE9BQU8sRUFBRTtBQUFBLElBQ3JFO0FBQUEsRUFDRjtBQUNBLE1BQUksQ0FBQyxPQUFPLE1BQU07QUFDaEIsYUFBUyxLQUFLLDhCQUE4QjtBQUFBLEVBQzlDO0FBQ0EsTUFBSSxPQUFPLFFBQVEsU0FBUyxHQUFJLEdBQUc7QUFDakMsYUFBUyxLQUFLLCtCQUErQjtBQUFBLEVBQy9DO0FBQ0EsU0FBTztBQUNUO0FBRU8sU0FBUyxZQUFZLFNBQWlEO0FBQzNFLFFBQU0sV0FBVyxvQkFBSSxJQUFzQjtBQUMzQyxVQUFRLFFBQVEsQ0FBQyxRQUFRLE1BQU07QUFDN0IsVUFBTSxTQUFTLGVBQWUsTUFBTTtBQUNwQyxRQUFJLE9BQU8sUUFBUTtBQUNqQixlQUFTLElBQUksR0FBRyxNQUFNO0FBQUEsSUFDeEI7QUFBQSxFQUNGLENBQUM7QUFDRCxTQUFPO0FBQ1Q7OztBRHBHQSxJQUFNLFNBQ0o7QUFLRixLQUFLLDJDQUEyQyxNQUFNO0FBQ3BELFFBQU0sVUFBVSxjQUFjLE1BQU07QUFDcEMsU0FBTyxNQUFNLFFBQVEsUUFBUSxDQUFDO0FBQzlCLFNBQU8sVUFBVSxRQUFRLENBQUMsRUFBRyxlQUFlLENBQUMsWUFBWSxTQUFTLENBQUM7QUFDbkUsU0FBTyxNQUFNLFFBQVEsQ0FBQyxFQUFHLGdCQUFnQixJQUFJO0FBQzdDLFNBQU8sTUFBTSxRQUFRLENBQUMsRUFBRyxjQUFjLElBQUk7QUFDM0MsU0FBTyxNQUFNLFFBQVEsQ0FBQyxFQUFHLE1BQU0sR0FBRztBQUNsQyxTQUFPLE1BQU0sUUFBUSxDQUFDLEVBQUcsUUFBUSxJQUFJO0FBQ3ZDLENBQUM7QUFFRCxLQUFLLGdEQUFnRCxNQUFNO0FBQ3pELFFBQU0sVUFBVSxjQUFjLE1BQU07QUFDcEMsU0FBTyxVQUFVLGNBQWMsa0JBQWtCLE9BQU8sQ0FBQyxHQUFHLE9BQU87QUFDckUsQ0FBQztBQUVELEtBQUssMENBQTBDLE1BQU07QUFDbkQsU0FBTztBQUFBLElBQ0wsTUFBTSxjQUFjLGtCQUFxQjtBQUFBLElBQ3pDLENBQUMsUUFBaUIsZUFBZSx1QkFBdUIsSUFBSSxTQUFTO0FBQUEsRUFDdkU7QUFDRixDQUFDO0FBRUQsS0FBSywrQkFBK0IsTUFBTTtBQUN4QyxTQUFPLE9BQU8sTUFBTSxjQUFjLG1CQUFtQixHQUFHLG1CQUFtQjtBQUM3RSxDQUFDO0FBRUQsS0FBSyxnQ0FBZ0MsTUFBTTtBQUN6QyxTQUFPLE9BQU8sTUFBTSxjQUFjLFlBQWUsR0FBRyxtQkFBbUI7QUFDekUsQ0FBQztBQUVELEtBQUssbURBQW1ELE1BQU07QUFDNUQsUUFBTSxPQUFPLGNBQWMsTUFBTSxFQUFFLENBQUM7QUFDcEMsU0FBTyxVQUFVLGVBQWUsSUFBSSxHQUFHLENBQUMsQ0FBQztBQUN6QyxRQUFNLFdBQVcsRUFBRSxHQUFHLE1BQU0sU0FBUyxJQUFJO0FBQ3pDLFNBQU8sR0FBRyxlQUFlLFFBQVEsRUFBRSxLQUFLLENBQUMsTUFBTSxFQUFFLFNBQVMsa0JBQWtCLENBQUMsQ0FBQztBQUM5RSxRQUFNLGVBQWUsRUFBRSxHQUFHLE1BQU0sU0FBUyxHQUFHO0FBQzVDLFNBQU8sR0FBRyxlQUFlLFlBQVksRUFBRSxTQUFTLENBQUM7QUFDbkQsQ0FBQztBQUVELEtBQUssMENBQTBDLE1BQU07QUFDbkQsUUFBTSxVQUFVLGNBQWMsTUFBTTtBQUNwQyxVQUFRLENBQUMsSUFBSSxFQUFFLEdBQUcsUUFBUSxDQUFDLEdBQUksU0FBUyxJQUFJO0FBQzVDLFFBQU0sV0FBVyxZQUFZLE9BQU87QUFDcEMsU0FBTyxVQUFVLENBQUMsR0FBRyxTQUFTLEtBQUssQ0FBQyxHQUFHLENBQUMsQ0FBQyxDQUFDO0FBQzVDLENBQUM7IiwKICAibmFtZXMiOiBbXQp9Cg==
