#!/usr/bin/env python3
"""Regenerate data/knots.csv and data/links2.csv from the KnotInfo/LinkInfo
CSV dumps shipped in the `database_knotinfo` Python package."""
import argparse
import ast
import csv
import pathlib

import database_knotinfo

csv.field_size_limit(10**9)


def rows(path):
    with open(path, newline="") as fh:
        reader = csv.reader(fh, delimiter="|")
        header = next(reader)
        next(reader)  # human-readable column descriptions
        for row in reader:
            yield dict(zip(header, row))


def pd_spec(tuples):
    return "pd:" + ";".join("X(" + ",".join(str(v) for v in t) + ")" for t in tuples)


def braid_spec(strands, letters):
    return f"braid:n={strands}:" + " ".join(str(v) for v in letters)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    ap.add_argument("--max-knot-crossings", type=int, default=10)
    ap.add_argument("--max-link-crossings", type=int, default=8)
    args = ap.parse_args()
    base = pathlib.Path(database_knotinfo.__file__).parent / "csv_data"
    out = pathlib.Path(args.out)

    with open(out / "knots.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "spec", "pd", "alexander", "determinant"])
        for d in rows(base / "knotinfo_data_complete.csv"):
            name = d["name"]
            if name == "0_1" or "_" not in name:
                continue
            prefix = name.split("_")[0]
            if not prefix.isdigit():
                continue
            crossings = int(prefix)
            if crossings > args.max_knot_crossings:
                continue
            letters = ast.literal_eval(d["braid_notation"])
            if letters and isinstance(letters[0], list):
                letters = letters[0]  # several braid words listed; any one will do
            strands = max(abs(v) for v in letters) + 1
            pd = ast.literal_eval(d["pd_notation"])
            w.writerow([name, braid_spec(strands, letters), pd_spec(pd),
                        d["alexander_polynomial"].replace(" ", ""), d["determinant"]])

    with open(out / "links2.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "spec", "alexander", "linking"])
        for d in rows(base / "linkinfo_data_complete.csv"):
            if d["components"] != "2" or not d["crossing_number"]:
                continue
            if int(d["crossing_number"]) > args.max_link_crossings:
                continue
            braid = d["braid_notation"].replace("{", "[").replace("}", "]")
            strands, letters = ast.literal_eval(braid)
            lk = ast.literal_eval(d["linking_matrix"].replace("{", "[").replace("}", "]"))[0][1]
            w.writerow([d["name"], braid_spec(strands, letters),
                        d["multivariable_alexander"].replace(" ", ""), lk])


if __name__ == "__main__":
    main()
