"""Result documents: canonical, byte-stable JSON for every command.

Key order is fixed by construction, lists are canonically sorted
upstream, and rationals are rendered as "a/b" strings, so identical
input and version always produce identical bytes.  Wall-clock timing is
opt-in because it would break that contract.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .ideals import format_ideal, monomial_string

FORMAT_VERSION = 1


def _rational(x):
    return str(Fraction(x))


def _vector(v):
    return [int(c) for c in v]


def _rational_vector(v):
    return [_rational(c) for c in v]


def ideal_entry(ideal):
    entry = {
        "generators": [_vector(g) for g in ideal.gens],
        "serialized": format_ideal(ideal),
    }
    if ideal.ambient.dim <= 3 and not ideal.is_zero:
        entry["monomials"] = [monomial_string(g) for g in ideal.gens]
    return entry


def record_entry(record, sn):
    entry = {"label": record.label}
    entry.update(ideal_entry(record.ideal))
    entry["faces"] = [
        {
            "index": i,
            "dim": sn.faces.faces[i].dim,
            "active_facets": sorted(sn.faces.faces[i].active_facets),
        }
        for i in record.generating_faces
    ]
    return entry


def instance_entry(cfg):
    entry = {
        "format_version": cfg.format_version,
        "dimension": cfg.dimension,
        "rays": [_vector(r) for r in cfg.rays],
        "w": _vector(cfg.w) if cfg.w is not None else None,
        "p": cfg.p,
        "e": cfg.e,
        "a": [_vector(g) for g in cfg.a_generators] if cfg.a_generators is not None else None,
        "t": _rational(cfg.t),
        "N": cfg.n_limit,
        "margin": cfg.margin,
        "pool_cap": cfg.pool_cap,
    }
    return entry


def report_entry(report):
    return {
        "passed": report.passed,
        "checks": [
            {"name": c.name, "status": "skip" if c.passed is None else ("pass" if c.passed else "fail"), "detail": c.detail}
            for c in report.checks
        ],
    }


def build_document(command, cfg, body, elapsed_ms=None):
    doc = {"format_version": FORMAT_VERSION, "command": command, "instance": instance_entry(cfg)}
    doc.update(body)
    if elapsed_ms is not None:
        doc["timing_ms"] = elapsed_ms
    return doc


def dump_document(doc):
    return json.dumps(doc, indent=2) + "\n"
