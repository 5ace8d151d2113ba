#!/usr/bin/env python3
"""Fit dimension, degree, h-vector, and ideal counts for the companion
maps, and write one JSON report per map.

    python3 scripts/survey_images.py --maps h3-phi h3-bar
    python3 scripts/survey_images.py --fermat 4 --outdir reports/

The fermat projection and psi h-vectors are checked against conjectured
closed forms; those comparisons are recorded as notes in the report,
marked "conjecture", never as established facts.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from uxh.cli import stringify
from uxh.companion import catalog_map, image_report, map_requirements
from uxh.field import default_field_specs, make_field


@dataclass
class Item:
    name: str
    m: int = None
    ideal_ks: tuple = (1, 2, 3)
    notes: list = field(default_factory=list)


DEFAULT = ["f4", "h3-phi", "h3-psi", "h3-bar"]


def fermat_items(m: int) -> list:
    conj_bar = [1, 3 * (m - 1), 2 * m * m - 7 * m + 9,
                -3 * (m - 2) * (m - 3) // 2, (m - 2) * (m - 3) // 2]
    return [
        Item("fermat-phi", m),
        Item("fermat-phibar", m, notes=[
            f"conjecture: h-vector {conj_bar} for the projected image"]),
        Item("fermat-psi", m, notes=[
            "conjecture: expected quadric count (5m^2-5m-12)/2 = "
            f"{(5 * m * m - 5 * m - 12) // 2}",
            "a negative h entry here leaves the aCM question open"]),
    ]


def run_item(item: Item, outdir: str, max_k: int) -> dict:
    req = map_requirements(item.name, m=item.m)
    spec = default_field_specs(golden=req["golden"],
                               zeta_order=req["zeta"])[0]
    mp = catalog_map(item.name, make_field(spec), m=item.m)
    t0 = time.time()
    rep = image_report(mp, ideal_ks=item.ideal_ks, max_k=max_k,
                       notes=tuple(item.notes))
    dt = time.time() - t0
    doc = stringify(rep.to_json())
    doc["seconds"] = f"{dt:.1f}"
    label = item.name if item.m is None else f"{item.name}-{item.m}"
    path = os.path.join(outdir, f"image_{label.replace(':', '-')}.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"{label:>16}: dim {rep.dim} degree {rep.degree} "
          f"h {rep.h_vector} ({dt:.1f}s) -> {path}")
    return doc


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--maps", nargs="*", default=None,
                    help=f"catalog map names (default {' '.join(DEFAULT)})")
    ap.add_argument("--fermat", type=int, default=None, metavar="M",
                    help="add the fermat trio for this m")
    ap.add_argument("--outdir", default="reports")
    ap.add_argument("--max-k", type=int, default=16, dest="max_k")
    args = ap.parse_args(argv)

    items = [Item(n) for n in (args.maps if args.maps is not None
                               else list(DEFAULT))]
    if args.fermat is not None:
        items += fermat_items(args.fermat)
    if not items:
        ap.error("nothing to survey")
    os.makedirs(args.outdir, exist_ok=True)
    for item in items:
        run_item(item, args.outdir, args.max_k)
    return 0


if __name__ == "__main__":
    sys.exit(main())
