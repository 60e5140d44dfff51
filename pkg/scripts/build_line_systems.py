#!/usr/bin/env python3
"""Synthesize all the equiangular line systems and dump them as JSON.

Writes one file per system into the output directory (default ./line_systems):
the 6 lines in R^3 at 1/sqrt(5), 16 in R^6 and 28 in R^7 at 1/3, 28 in R^21
at 1/9, and the projective-line systems for q = 5, 9, 13 at 1/sqrt(q).
"""

import argparse
import json
import pathlib

from equilines import (embed_lines, extend, paley_graph, pentagon, spectrum,
                       t1_graph)


def systems():
    yield "pentagon_6_in_R3", extend(pentagon()), "1-sqrt(5)"
    yield "t1_3_16_in_R6", extend(t1_graph(3)), "-2"
    yield "t1_5_28_in_R7", extend(t1_graph(5)), "-2"
    yield "t1_5_28_in_R21", extend(t1_graph(5)), "10"
    for q in (5, 9, 13):
        ext = extend(paley_graph(q))
        lam = spectrum(ext).min_eigenvalue()
        yield f"paley_{q}_{q + 1}_lines", ext, lam


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="line_systems")
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, graph, value in systems():
        ls = embed_lines(graph, value)
        path = out / f"{name}.json"
        path.write_text(json.dumps(ls.to_json_dict(), indent=2))
        print(f"{path}  n={ls.n} dim={ls.dim} cos={ls.cos_exact} "
              f"residual={ls.residual:.2e}")


if __name__ == "__main__":
    main()
