from pathlib import Path

import pytest

from rightlcm import catalog, lab
from rightlcm.config import ConfigError, load, load_text
from rightlcm.core import shortlex_ball

CONFIGS = sorted((Path(__file__).parent.parent / "configs").glob("*.ini"))


@pytest.mark.parametrize("path", CONFIGS, ids=lambda p: p.stem)
def test_shipped_configs_match_catalog(path):
    """Each config file builds the same semigroup as its catalog entry."""
    cfg = load(str(path))
    ref = catalog.get(path.stem)
    expected = catalog.CATALOG[path.stem].expect
    assert all(expected.get(k) == v for k, v in cfg.expect.items())
    S = cfg.semigroup
    mine = sorted(S.format_element(x) for x in shortlex_ball(S, 3))
    theirs = sorted(ref.format_element(x) for x in shortlex_ball(ref, 3))
    assert mine == theirs


def test_config_verdicts_reproduce_catalog():
    cfg = load(str(CONFIGS[0].parent / "f2.ini"))
    assert lab.check_D3(cfg.semigroup).holds_
    assert lab.check_strong_effectiveness(cfg.semigroup).holds_


def test_budget_section():
    cfg = load_text("[family]\nkind = naturals\n[budget]\nradius = 2\ndepth = 6\n")
    assert cfg.budget.radius == 2 and cfg.budget.depth == 6


@pytest.mark.parametrize("text,line,fragment", [
    ("[family]\nkind = power-endomorphisms\nrank = 2\nexponents = 2 1; 2 2\n", 4, "relatively prime"),
    ("[family]\nkind = nope\n", 2, "unknown family kind"),
    ("[family]\nkind = naturals\n[budget]\nradius = x\n", 4, "integer"),
    ("[family]\nkind = naturals\n[budget]\nwidth = 3\n", 4, "unknown budget key"),
    ("[family]\nkind = self-similar\n[automaton]\na, 0 -> 1, e\na, 0 -> 0, a\n", 5, "duplicate"),
    ("[family]\nkind = self-similar\n[automaton]\na 0 1\n", 4, "expected"),
    ("[family]\nkind = naturals\n[expect]\nD1 = maybe\n", 4, "verdict"),
    ("[family]\nkind = naturals\n[extra]\n", 3, "unknown section"),
    ("[family]\nkind = generated\n", 1, "needs the key"),
    ("kind = naturals\n", 1, "section"),
])
def test_diagnostics_have_location(text, line, fragment):
    with pytest.raises(ConfigError) as exc:
        load_text(text, "t.ini")
    assert exc.value.line == line and fragment in str(exc.value)
    assert str(exc.value).startswith(f"t.ini:{line}:")


def test_unknown_target():
    with pytest.raises(ConfigError, match="catalog"):
        load("no-such-thing")
