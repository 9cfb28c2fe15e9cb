#!/usr/bin/env python3
"""Regenerate corpus/manifest.json from the corpus sources.

Scans each .rgl file in dependency order, emitting one manifest entry per
declaration (positionally, as the corpus runner requires).  Definitions and
postulates are named by their declared identifier; eq/fail-eq assertions take
curated names from the tables below.  Citations come from the comment block
immediately above each declaration.
"""

import json
import re
import sys
from pathlib import Path

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

# Files in check order, with their direct dependencies.
FILES = [
    ("prelude.rgl", []),
    ("graphs.rgl", ["prelude.rgl"]),
    ("univalence.rgl", ["prelude.rgl", "graphs.rgl"]),
    ("lenses.rgl", ["prelude.rgl", "graphs.rgl", "univalence.rgl"]),
    ("defnlenses.rgl", ["lenses.rgl", "univalence.rgl"]),
    ("poly.rgl", ["defnlenses.rgl"]),
    ("classify.rgl", ["lenses.rgl", "univalence.rgl"]),
    ("fib.rgl", ["classify.rgl"]),
]

# Names for #eq / #fail-eq assertions, per file, in file order.
ASSERTION_NAMES = {
    "prelude.rgl": [
        "cc-refl-compute",
        "tpt-refl-compute",
        "nat-code-succ-compute",
        "zero-ne-one",
        "pair-id-split-compute",
        "pair-id-unsplit-compute",
        "pair-id-dsplit-compute",
        "pair-id-dunsplit-compute",
    ],
    "graphs.rgl": [
        "op-involution",
        "total-op-involution",
        "restriction-component",
    ],
    "univalence.rgl": [
        "id-to-edge-discrete-compute",
        "id-to-edge-left-discrete-compute",
        "id-to-equiv-refl-compute",
        "coproduct-as-display",
        "binary-product-as-display",
        "op-not-identity",
        "right-sym-discrete-compute",
    ],
    "lenses.rgl": [
        "unbiased-of-cov-vertices",
        "unbiased-of-cov-edges",
        "unbiased-of-cov-reflexivity",
        "unbiased-of-ctrv-vertices",
        "unbiased-of-ctrv-edges",
        "unbiased-of-ctrv-reflexivity",
        "unbiased-of-cov-display",
        "unbiased-of-ctrv-display",
        "totop-display-vertices",
        "totop-display-edges",
        "totop-display-reflexivity",
        "display-of-total-opposite-cov",
        "display-of-total-opposite-ctrv",
        "cov-display-component",
        "ctrv-display-component",
        "binop-display",
    ],
    "defnlenses.rgl": [
        "discrete-cov-display-reflexivity",
        "discrete-ctrv-display-reflexivity",
        "coproduct-as-lens-display",
        "universe-lens-unitor-compute",
        "simplex-lens-unitor-compute",
        "flatten-cov-redisplay-reflexivity",
        "flatten-ctrv-redisplay-reflexivity",
    ],
    "poly.rgl": [
        "poly-cov-compute",
        "poly-ctrv-compute",
        "pmap-classifier-compute",
        "list-classifier-compute",
        "list-classifier-cov-compute",
    ],
    "classify.rgl": [
        "graph-classifier-explicit",
        "rx-structure-diagonal",
        "rx-graph-classifier-explicit",
        "dgraph-classifier-explicit",
        "drx-structure-diagonal",
        "drx-over-classifier-explicit",
        "lens-pull-vertex-codes",
        "lens-pull-edge-codes",
        "lens-pull-rx-transport",
        "lens-classifier-reflexivity",
        "vertex-lens-push-compute",
        "vertex-lens-unitor-compute",
        "family-classifier-explicit",
        "str-structure-diagonal",
    ],
    "fib.rgl": [
        "roundtrip-push-compute",
        "roundtrip-unitor-compute",
        "lext-push-compute",
        "lext-unitor-compute",
        "rext-push-compute",
        "rext-unitor-compute",
    ],
}

# A definition whose declared type is itself an identification, a
# propositionality/contractibility/univalence claim, or an equivalence of
# structures is recorded as a theorem; the distinction is documentary.
THEOREM_TYPE = re.compile(
    r"\bId |\bisProp\b|\bisContr\b|\bisSet\b|\bisUnivalent\b|\bisUnivalentD\b"
    r"|\bEmptyT\b|\bDGEquiv\b|\bGEquiv\b|\bEquiv \(|\bhasUnivPush\b|\bhasUnivPull\b"
)

DECL = re.compile(r"^(def|postulate)\s+(\S+)\s")
ASSERT = re.compile(r"^#(eq|fail-eq)\s")


def entry_kind(decl: str, header: str) -> str:
    if decl == "postulate":
        return "postulate"
    return "theorem" if THEOREM_TYPE.search(header) else "definition"


def scan(path: Path, fname: str):
    entries = []
    assertion_names = list(ASSERTION_NAMES[fname])
    lines = path.read_text(encoding="utf-8").splitlines()
    comments: list[str] = []
    i = 0
    while i < len(lines):
        line = lines[i]
        if line.startswith("--"):
            comments.append(line.lstrip("-").strip())
            i += 1
            continue
        m = DECL.match(line)
        a = ASSERT.match(line)
        if m:
            decl, name = m.group(1), m.group(2)
            # Gather the header (type annotation) up to the ':=' or end of decl.
            header_lines = [line]
            j = i + 1
            while ":=" not in " ".join(header_lines) and j < len(lines) and not (
                DECL.match(lines[j]) or ASSERT.match(lines[j]) or lines[j].startswith("--")
            ):
                header_lines.append(lines[j])
                j += 1
            header = " ".join(header_lines)
            if ":=" in header:
                header = header.split(":=", 1)[0]
            citation = " ".join(c for c in comments if c).strip()
            if not citation:
                citation = (
                    "Generic datum fixed for downstream assertions."
                    if decl == "postulate"
                    else "Supporting definition."
                )
            entries.append(
                {
                    "name": name,
                    "kind": entry_kind(decl, header),
                    "file": fname,
                    "citation": citation,
                    "anchor": f"{fname}:{i + 1}",
                }
            )
            comments = []
        elif a:
            kind = "eq-assertion" if a.group(1) == "eq" else "fail-assertion"
            if not assertion_names:
                sys.exit(f"{fname}:{i + 1}: ran out of assertion names")
            citation = " ".join(c for c in comments if c).strip() or "Computation assertion."
            entries.append(
                {
                    "name": assertion_names.pop(0),
                    "kind": kind,
                    "file": fname,
                    "citation": citation,
                    "anchor": f"{fname}:{i + 1}",
                }
            )
            comments = []
        elif line.strip():
            comments = []
        else:
            comments = []
        i += 1
    if assertion_names:
        sys.exit(f"{fname}: {len(assertion_names)} unused assertion names: {assertion_names}")
    return entries


def main() -> None:
    manifest = {
        "files": [{"path": p, "deps": d} for p, d in FILES],
        "entries": [],
    }
    for fname, _ in FILES:
        manifest["entries"].extend(scan(CORPUS / fname, fname))
    out = CORPUS / "manifest.json"
    out.write_text(json.dumps(manifest, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    counts = {}
    for e in manifest["entries"]:
        counts[e["kind"]] = counts.get(e["kind"], 0) + 1
    print(f"wrote {out} with {len(manifest['entries'])} entries: {counts}")


if __name__ == "__main__":
    main()
