#!/usr/bin/env python3
"""Convert GAP transgrp data files (trans*.grp[.gz]) into the line-oriented
transitive group database read by `starp table`.

Output format, one group per line, 1-based points:

    n i : (1,2,3)(4,5) ; (1,4) ; ...

Usage: export_transgrp.py --src DIR --lib TRANS_GRP --degrees 2..16 > out.db
"""
import argparse
import gzip
import re
import sys
from pathlib import Path


def read_text(path):
    if path.suffix == ".gz":
        with gzip.open(path, "rt", encoding="latin-1") as fh:
            return fh.read()
    return path.read_text(encoding="latin-1")


def strip_comments(text):
    out = []
    for line in text.splitlines():
        in_str = False
        buf = []
        for ch in line:
            if ch == '"':
                in_str = not in_str
            if ch == "#" and not in_str:
                break
            buf.append(ch)
        out.append("".join(buf))
    return "\n".join(out)


def match_bracket(text, start):
    depth = 0
    in_str = False
    for pos in range(start, len(text)):
        ch = text[pos]
        if ch == '"':
            in_str = not in_str
        elif in_str:
            continue
        elif ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                return pos
    raise ValueError("unbalanced list")


def split_top(body):
    """Split a list body on top-level commas (outside brackets, parens, strings)."""
    items, depth, in_str, cur = [], 0, False, []
    for ch in body:
        if ch == '"':
            in_str = not in_str
        if not in_str:
            if ch in "[(":
                depth += 1
            elif ch in "])":
                depth -= 1
            elif ch == "," and depth == 0:
                items.append("".join(cur).strip())
                cur = []
                continue
        cur.append(ch)
    if "".join(cur).strip():
        items.append("".join(cur).strip())
    return items


PERM_RE = re.compile(r"^(\(\s*\d+(\s*,\s*\d+)*\s*\)\s*)+$|^\(\s*\)$")


def parse_entries(list_text):
    body = list_text.strip()[1:-1]
    entries = []
    for item in split_top(body):
        if not item.startswith("["):
            raise ValueError("unexpected entry: " + item[:80])
        parts = split_top(item.strip()[1:-1])
        gens, name = [], None
        for part in parts:
            compact = re.sub(r"\s+", "", part)
            if part.startswith('"'):
                name = part.strip('"')
            elif PERM_RE.match(compact):
                gens.append(compact)
            else:
                raise ValueError("unsupported generator form: " + part[:80])
        entries.append((gens, name))
    return entries


def collect(files, degree):
    groups = {}
    assign = re.compile(r"TRANSGRP\[(\d+)\](\{\[(\d+)\.\.(\d+)\]\})?\s*:=\s*\[")
    for path in files:
        text = strip_comments(read_text(path))
        for m in assign.finditer(text):
            if int(m.group(1)) != degree:
                continue
            start = m.end() - 1
            end = match_bracket(text, start)
            literal = text[start:end + 1]
            if literal.replace(" ", "").replace("\n", "") == "[]":
                continue
            entries = parse_entries(literal)
            first = int(m.group(3)) if m.group(2) else 1
            for offset, entry in enumerate(entries):
                groups[first + offset] = entry
    return groups


def collect_orders(files, degree):
    """Group orders from TRANSSIZES or TRANSPROPERTIES, when the data files carry them."""
    for path in files:
        text = strip_comments(read_text(path))
        m = re.search(r"TRANSSIZES\[%d\]\s*:=\s*\[" % degree, text)
        if m:
            start = m.end() - 1
            return [int(x) for x in split_top(text[start + 1:match_bracket(text, start)])]
        m = re.search(r"TRANSPROPERTIES\[%d\]\s*:=\s*\[" % degree, text)
        if m:
            start = m.end() - 1
            rows = split_top(text[start + 1:match_bracket(text, start)])
            if rows:
                return [int(split_top(r.strip()[1:-1])[0]) for r in rows]
    return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--src", required=True, help="transgrp data directory")
    ap.add_argument("--lib", required=True, help="transgrp lib/trans.grp (degrees <= 7)")
    ap.add_argument("--degrees", default="2..16")
    args = ap.parse_args()
    lo, hi = (int(x) for x in args.degrees.split(".."))
    src = Path(args.src)
    print("# Transitive permutation groups, exported from the GAP transgrp library")
    print("# (A. Hulpke et al.; GPL-2.0-or-later). Indices follow TransitiveGroup(n,i).")
    print("# Format: n i : gen ; gen ; ...   (cycle notation, 1-based points)")
    for n in range(lo, hi + 1):
        if n <= 7:
            files = [Path(args.lib)]
            text = strip_comments(read_text(Path(args.lib)))
            m = re.search(r"TRANSGRP\s*:=\s*\[", text)
            start = m.end() - 1
            outer = text[start:match_bracket(text, start) + 1]
            per_degree = split_top(outer.strip()[1:-1])
            entries = parse_entries(per_degree[n - 1])
            groups = {i + 1: e for i, e in enumerate(entries)}
            orders = None
        else:
            files = sorted(src.glob(f"trans{n}.grp*")) + sorted(src.glob(f"trans{n}[a-z]*.grp*"))
            groups = collect(files, n)
        orders = None if n <= 7 else collect_orders(files, n)
        count = len(groups)
        if orders is not None and len(orders) != count:
            sys.exit(f"degree {n}: {len(orders)} orders for {count} groups")
        if sorted(groups) != list(range(1, count + 1)):
            sys.exit(f"degree {n}: gaps in group numbering")
        print(f"# degree {n}: {count} groups")
        for i in range(1, count + 1):
            gens, name = groups[i]
            note = []
            if orders:
                note.append(f"order={orders[i - 1]}")
            if name:
                note.append(name)
            print(f"{n} {i} : " + " ; ".join(gens) + ("   # " + " ".join(note) if note else ""))


if __name__ == "__main__":
    main()
