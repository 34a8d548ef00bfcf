import itertools
import json

from voracious import Verifier, VerifierConfig

CHECK_NAMES = [
    "projection-unique-maximum",
    "constants-monotone-in-radius",
    "projection-monotone-under-prefix",
    "fellow-traveller-bounds",
    "automaton-language-agreement",
    "sharp-angled-separator-sampling",
]


def _fresh(stack, name, **overrides):
    return Verifier(stack(name).geometry, VerifierConfig(**overrides))


def test_a2_constants_frozen(stack):
    v = _fresh(stack, "a2", radius=3)
    report = v.run_suite()
    c = report.constants
    assert (c.C_hat, c.N_hat, c.Q_hat) == (3, 3, 1)
    assert c.Q_hat_canonical == 2
    assert c.ft_ii_max == 2
    assert c.ft_iii_max == 3
    assert report.passed


def test_line_constants_frozen(stack):
    v = _fresh(stack, "d_infinity", radius=6)
    report = v.run_suite()
    c = report.constants
    assert (c.C_hat, c.N_hat, c.Q_hat) == (1, 1, 0)
    assert c.ft_ii_max == 1
    assert c.ft_iii_max == 1
    assert report.passed


def test_triangle_suite_smoke(stack):
    v = _fresh(stack, "triangle_333", radius=4, separator_samples=20)
    report = v.run_suite()
    by_name = {c.name: c for c in report.checks}
    assert [c.name for c in report.checks] == CHECK_NAMES
    assert report.passed
    assert by_name["projection-unique-maximum"].status == "pass"
    assert by_name["fellow-traveller-bounds"].status == "pass"
    assert report.constants.C_hat >= 3


def test_fellow_traveller_matches_direct_recomputation(stack):
    # Independent recomputation for the tiny group: walk both words letter by
    # letter, measure each gap directly through group multiplication.
    s = stack("a2")
    sys_ = s.system
    v = _fresh(stack, "a2", radius=3)
    report = v.run_suite()

    def walk(word, head):
        cur = head
        out = [cur]
        for x in word:
            cur = sys_.right_mul(cur, x)
            out.append(cur)
        return out

    def dist(a, b):
        return sys_.multiply(sys_.inverse(a), b).length

    max_ii = 0
    max_iii = 0
    for g in sys_.ball(3):
        for s_idx in range(2):
            for kind in ("ii", "iii"):
                if kind == "ii":
                    g2 = sys_.right_mul(g, s_idx)
                    head = sys_.identity
                else:
                    g2 = sys_.left_mul(g, s_idx)
                    head = sys_.element_of_word((s_idx,))
                if g2.length != g.length + 1 or g2.length > 3:
                    continue
                for w1 in s.language.all_words_of(sys_.intern(g)):
                    for w2 in s.language.all_words_of(sys_.intern(g2)):
                        left = walk(w1, head)
                        right = walk(w2, sys_.identity)
                        worst = max(
                            dist(
                                left[min(i, len(w1))],
                                right[min(i, len(w2))],
                            )
                            for i in range(max(len(w1), len(w2)) + 1)
                        )
                        if kind == "ii":
                            max_ii = max(max_ii, worst)
                        else:
                            max_iii = max(max_iii, worst)
    assert report.constants.ft_ii_max == max_ii
    assert report.constants.ft_iii_max == max_iii


def test_constants_by_radius_monotone(stack):
    v = _fresh(stack, "triangle_334", radius=5)
    constants = v.estimate_constants()
    assert v.check_constants_monotone().status == "pass"
    rows = constants.by_radius
    assert sorted(rows) == list(range(6))
    for key in ("C_hat", "N_hat", "Q_hat", "Q_hat_canonical"):
        vals = [rows[r][key] for r in sorted(rows)]
        assert vals == sorted(vals)
    assert rows[5]["C_hat"] == constants.C_hat


def test_report_json_schema_and_determinism(stack):
    a = _fresh(stack, "d_infinity", radius=5).run_suite().to_json()
    b = _fresh(stack, "d_infinity", radius=5).run_suite().to_json()
    assert a == b
    data = json.loads(a)
    assert set(data) == {"group", "radius", "constants", "checks", "warnings"}
    assert data["radius"] == 5
    assert data["group"]["generators"] == ["s", "t"]
    assert set(data["constants"]) == {
        "C_hat",
        "N_hat",
        "Q_hat",
        "Q_hat_canonical",
        "ft_ii_max",
        "ft_iii_max",
        "by_radius",
    }
    for check in data["checks"]:
        assert check["status"] in {"pass", "fail", "skipped"}


def test_zero_radius_is_vacuous_but_clean(stack):
    report = _fresh(stack, "triangle_333", radius=0).run_suite()
    assert report.passed
    assert report.warnings  # margin warning fires
    c = report.constants
    assert (c.C_hat, c.N_hat, c.Q_hat) == (0, 0, 0)


def test_saturated_pivot_cap_skips_agreement(stack):
    # An artificially low pivot cap truncates the automaton; the agreement
    # check must report "skipped", never a false pass.
    v = _fresh(stack, "triangle_333", radius=4, pivot_cap=1, word_length=4)
    agreement = v.check_automaton_agreement()
    assert agreement.status == "skipped"
    assert agreement.details["pivot_saturated"]
    assert any("saturated" in w for w in v.warnings)


def test_rank2_separator_sampling_skipped(stack):
    check = _fresh(stack, "d_infinity", radius=4).check_separator_sampling()
    assert check.status == "skipped"


def test_finite_group_separator_sampling_skipped(stack):
    # Finite groups have no disjoint walls at all, so the separator
    # hypothesis is never met.
    report = _fresh(stack, "a3", radius=4).run_suite()
    by_name = {c.name: c for c in report.checks}
    assert by_name["sharp-angled-separator-sampling"].status == "skipped"
    assert report.passed


def test_separator_sampling_runs_on_triangles(stack):
    v = _fresh(stack, "triangle_334", radius=5, separator_samples=25)
    check = v.check_separator_sampling()
    assert check.status == "pass"
    assert check.details["samples"] == 25
    assert check.details["orbit_walls_checked"] > 0


def test_separator_free_pairs_agree_between_search_domains(stack):
    # The verifier's complete separator search agrees with the frontier
    # membership computed from inversion-set candidates.
    s = stack("triangle_334")
    geo = s.geometry
    v = Verifier(geo, VerifierConfig(radius=4))
    for g in s.system.ball(4):
        front = geo.frontier_set(g)
        for wall in geo.inversion_walls(g):
            assert (v._wall_separator(g, wall) is None) == (wall in front)
