"""Semigroup configurations: INI files with named sections.

    [family]
    kind = power-endomorphisms      # see KINDS below
    rank = 2
    exponents = 2 1; 1 2            # one row per endomorphism

    [automaton]                     # self-similar kind only
    a, 0 -> 1, e
    a, 1 -> 0, a

    [budget]
    radius = 4
    depth = 4

    [expect]
    D3 = holds

A target on the command line is either a catalog name or a path to such a
file.  Validation errors name the file, line and key.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict

from . import catalog
from .automata import SelfSimilarGroup, ZappaSzep, parse_table
from .core import SearchBudget, Semigroup
from .groups import FreeGroup, Integers, ShiftGroup
from .monoids import FreeAbelianMonoid, FreeMonoid, GeneratedSubmonoid, Naturals, NaturalsNoOne
from .semidirect import (DiagonalScaling, PolynomialMultiplication, PowerEndomorphisms,
                         SemidirectProduct, ShiftAction)

VERDICTS = ("holds", "fails", "unknown")


class ConfigError(ValueError):
    def __init__(self, message, source="<config>", line=None):
        self.source, self.line = source, line
        where = f"{source}:{line}" if line else source
        super().__init__(f"{where}: {message}")


@dataclass
class SemigroupConfig:
    name: str
    semigroup: Semigroup
    budget: SearchBudget
    expect: Dict[str, str] = field(default_factory=dict)
    source: str = "<catalog>"


def _ints(text):
    return tuple(int(t) for t in re.split(r"[\s,]+", text.strip()) if t)


def _poly_coeffs(text):
    from .groups import RationalPolynomials

    return RationalPolynomials().parse(text)


def _build_naturals(sec):
    return Naturals(_ints(sec.get("ball_primes", "2 3 5")))


def _build_naturals_no_one(sec):
    return NaturalsNoOne(_ints(sec.get("ball_primes", "2 3 5")))


def _build_generated(sec):
    return GeneratedSubmonoid(_ints(sec["generators"]))


def _build_free_monoid(sec):
    return FreeMonoid(sec["alphabet"].strip())


def _build_free_abelian(sec):
    return FreeAbelianMonoid(int(sec["rank"]))


def _build_integer_multiplication(sec):
    P = Naturals(_ints(sec.get("ball_primes", "2 3")))
    return SemidirectProduct(DiagonalScaling(Integers(), P, lambda p: ((p,), 1), "multiplication"),
                             name="Z x| N^x")


def _build_shift(sec):
    k = int(sec.get("rank", "1"))
    modulus = int(sec.get("modulus", "0"))
    return SemidirectProduct(ShiftAction(ShiftGroup(k, modulus), FreeAbelianMonoid(k)))


def _build_power_endomorphisms(sec):
    rows = [_ints(r) for r in sec["exponents"].split(";") if r.strip()]
    rank = int(sec.get("rank", str(len(rows[0]) if rows else 0)))
    return SemidirectProduct(PowerEndomorphisms(FreeGroup(rank), rows))


def _build_polynomial(sec):
    polys = [_poly_coeffs(t) for t in sec["polynomials"].split(";") if t.strip()]
    return SemidirectProduct(PolynomialMultiplication(polys))


KINDS = {
    "naturals": _build_naturals,
    "naturals-no-one": _build_naturals_no_one,
    "generated": _build_generated,
    "free-monoid": _build_free_monoid,
    "free-abelian": _build_free_abelian,
    "integer-multiplication": _build_integer_multiplication,
    "shift": _build_shift,
    "power-endomorphisms": _build_power_endomorphisms,
    "polynomial": _build_polynomial,
    "self-similar": None,
    "catalog": None,
}

# the key a parameter error is reported against
_MAIN_KEY = {"naturals": "ball_primes", "naturals-no-one": "ball_primes", "generated": "generators",
             "free-monoid": "alphabet", "free-abelian": "rank", "integer-multiplication": "ball_primes",
             "shift": "rank", "power-endomorphisms": "exponents", "polynomial": "polynomials"}


def _line_index(text):
    """(section, key) -> line number; automaton rows are keyed by position."""
    where, section = {}, None
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"\[([^\]]+)\]", line)
        if m:
            section = m.group(1).strip()
            where[(section, None)] = n
            continue
        if section == "automaton":
            rows = where.setdefault(("automaton", "rows"), [])
            rows.append(n)
            continue
        where.setdefault((section, re.split(r"=", line, 1)[0].strip()), n)
    return where


def load_text(text: str, source: str = "<config>") -> SemigroupConfig:
    cp = configparser.ConfigParser(allow_no_value=True, delimiters=("=",),
                                   comment_prefixes=("#",), inline_comment_prefixes=("#",),
                                   interpolation=None)
    cp.optionxform = str
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        line = getattr(exc, "lineno", None)
        raise ConfigError(str(exc).splitlines()[0], source, line) from None
    lines = _line_index(text)

    def fail(msg, section, key=None):
        raise ConfigError(msg, source, lines.get((section, key), lines.get((section, None))))

    if not cp.has_section("family"):
        raise ConfigError("missing [family] section", source)
    fam = cp["family"]
    kind = (fam.get("kind") or "").strip()
    if kind not in KINDS:
        fail(f"unknown family kind {kind!r}; known: {', '.join(KINDS)}", "family", "kind")
    for sec in cp.sections():
        if sec not in ("family", "automaton", "budget", "expect"):
            fail(f"unknown section [{sec}]", sec)

    expect = {}
    name = (fam.get("name") or kind).strip()
    if kind == "catalog":
        if name not in catalog.CATALOG:
            fail(f"unknown catalog entry {name!r}", "family", "name")
        S = catalog.get(name)
        expect.update(catalog.CATALOG[name].expect)
    elif kind == "self-similar":
        if not cp.has_section("automaton"):
            fail("self-similar families need an [automaton] section", "family", "kind")
        rows = list(cp["automaton"].keys())
        try:
            table = parse_table(rows)
            alphabet = (fam.get("alphabet") or "").strip() or "".join(
                sorted({x for (_, x) in table}))
            gens = (fam.get("generators") or "").split()
            S = ZappaSzep(SelfSimilarGroup(alphabet, table, gens or None, name=name))
        except (ValueError, KeyError) as exc:
            m = re.match(r"automaton row (\d+)", str(exc))
            rows = lines.get(("automaton", "rows"), [])
            if m and int(m.group(1)) <= len(rows):
                raise ConfigError(str(exc), source, rows[int(m.group(1)) - 1]) from None
            fail(str(exc), "automaton")
    else:
        try:
            S = KINDS[kind](fam)
        except KeyError as exc:
            fail(f"kind {kind} needs the key {exc.args[0]!r}", "family")
        except (ValueError, TypeError) as exc:
            fail(f"invalid parameters for {kind}: {exc}", "family", _MAIN_KEY.get(kind))

    budget_kw = {}
    if cp.has_section("budget"):
        for key, val in cp["budget"].items():
            if key not in SearchBudget.__dataclass_fields__:
                fail(f"unknown budget key {key!r}", "budget", key)
            try:
                budget_kw[key] = int(val)
            except (TypeError, ValueError):
                fail(f"budget {key} must be an integer, got {val!r}", "budget", key)
    if cp.has_section("expect"):
        for key, val in cp["expect"].items():
            v = (val or "").strip().lower()
            if v not in VERDICTS:
                fail(f"expected verdict must be one of {VERDICTS}, got {val!r}", "expect", key)
            expect[key] = v
    return SemigroupConfig(name, S, SearchBudget.from_env(**budget_kw), expect, source)


def load(target: str) -> SemigroupConfig:
    """A catalog name, or the path of a config file."""
    if target in catalog.CATALOG:
        entry = catalog.CATALOG[target]
        return SemigroupConfig(target, catalog.get(target), SearchBudget.from_env(),
                               dict(entry.expect))
    path = Path(target)
    if not path.exists():
        raise ConfigError(f"neither a catalog entry nor a file (catalog: {', '.join(catalog.CATALOG)})",
                          target)
    return load_text(path.read_text(), str(path))
