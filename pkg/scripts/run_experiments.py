#!/usr/bin/env python3
"""Run every Rascal/Pascal experiment once and print a summary table.

    python scripts/run_experiments.py --rows 200 --ring-rows 60
"""
from __future__ import annotations

import argparse
import time
from dataclasses import asdict, dataclass

from rascal_lab import (ashley_verify, build_pascal, build_rascal_additive, build_rascal_closed_form,
                        build_rascal_diagonal, build_rascal_diamond, even_diamond_verify,
                        hockey_stick_check, odd_diamond_verify, representable_values, tmeg_verify)
from rascal_lab.rules import DIRECTIONS, infer_affine_rule
from rascal_lab.triangle import first_difference


@dataclass
class ExperimentConfig:
    rows: int = 201
    ring_rows: int = 60
    mine_rows: int = 10
    stick_rows: int = 25
    frobenius_limit: int = 1000


def _templates():
    names = list(DIRECTIONS)
    for size in range(1, len(names) + 1):
        for start in range(len(names) - size + 1):
            yield names[start:start + size]


def run(cfg: ExperimentConfig) -> None:
    t0 = time.perf_counter()
    ref = build_rascal_closed_form(cfg.rows)
    for build in (build_rascal_diamond, build_rascal_additive, build_rascal_diagonal):
        diff = first_difference(build(cfg.rows), ref)
        print(f"{build.__name__:24s} vs closed form ({cfg.rows} rows): "
              f"{'identical' if diff is None else f'differs at {diff}'}")

    rascal, pascal = build_rascal_diamond(cfg.rows), build_pascal(20)
    for verify in (tmeg_verify, ashley_verify):
        print(f"{verify.__name__:24s} rascal: {_verdict(verify(rascal))}   "
              f"pascal(20): {_verdict(verify(pascal))}")
    ring_t = build_rascal_diamond(cfg.ring_rows)
    for verify in (odd_diamond_verify, even_diamond_verify):
        print(f"{verify.__name__:24s} rascal({cfg.ring_rows}): {_verdict(verify(ring_t))}   "
              f"pascal(20): {_verdict(verify(pascal))}")

    for name, t in (("rascal", build_rascal_closed_form(cfg.mine_rows)), ("pascal", build_pascal(cfg.mine_rows))):
        for tmpl in _templates():
            try:
                rule = infer_affine_rule(t, [DIRECTIONS[d] for d in tmpl], True)
            except ValueError:
                continue
            print(f"mine {name}({cfg.mine_rows}) over {','.join(tmpl):10s}+1: "
                  f"{rule.to_text() if rule else 'no rule found'}")

    p = build_pascal(cfg.stick_rows)
    sticks = [(s, n) for s in range(cfg.stick_rows) for n in range(1, cfg.stick_rows - s)]
    print(f"hockey sticks within {cfg.stick_rows} rows: "
          f"{sum(hockey_stick_check(p, s, n) for s, n in sticks)}/{len(sticks)} hold")
    _, missing = representable_values(3, 5, cfg.frobenius_limit)
    print(f"3a+5b not representable up to {cfg.frobenius_limit}: {missing}")
    print(f"done in {time.perf_counter() - t0:.2f}s with {asdict(cfg)}")


def _verdict(rep) -> str:
    return f"{'PASS' if rep.holds else 'FAIL'} ({rep.cells_checked} checked, {len(rep.counterexamples)} bad)"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(ExperimentConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    run(ExperimentConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
