"""Lattice-scan tests: biquadratic curves, involutions, grids, audits."""

from dataclasses import replace
from fractions import Fraction

import pytest

from ellfam.arith import FactorBudget
from ellfam.curves import INFINITY, isomorphic_over_Q
from ellfam.polyq import PolyQ
from ellfam.scan import (
    CURVE_C,
    CURVE_D1,
    CURVE_D2,
    BiquadraticCurve,
    DegenerateFiber,
    ScanGrid,
    builtin_scans,
    involutions,
    lattice_scan,
    quartic_correspondence,
    scan_spec_z8_first,
    symmetry_audit,
)

F = Fraction
BUD = FactorBudget(10**4, 10**4)


@pytest.fixture(scope="module")
def specs():
    return builtin_scans(radius=1, budget=BUD)


@pytest.fixture(scope="module")
def grids(specs):
    return {name: lattice_scan(spec) for name, spec in specs.items()}


class TestBiquadraticCurve:
    def test_known_point(self):
        assert CURVE_C.contains((-1, 0))

    def test_rejects_reducible(self):
        # r^2 - s^2 factors
        with pytest.raises(ValueError):
            BiquadraticCurve(((0, 0, -1), (0, 0, 0), (1, 0, 0)))

    def test_rejects_low_degree(self):
        # r*s + 1 has degree 1 in both variables
        with pytest.raises(ValueError):
            BiquadraticCurve(((1, 0, 0), (0, 1, 0), (0, 0, 0)))

    def test_quadratic_at(self):
        a, b, c = CURVE_C.quadratic_at("s", -1)
        assert (a, b, c) == (F(-20), F(120), F(0))


class TestInvolutions:
    def test_printed_image(self):
        tau1, tau2 = involutions(CURVE_C, (-1, 0))
        assert tau1 == (F(-1), F(6))
        assert CURVE_C.contains(tau1) and CURVE_C.contains(tau2)

    def test_involutive(self):
        pt = (F(-1), F(0))
        tau1, tau2 = involutions(CURVE_C, pt)
        assert involutions(CURVE_C, tau1)[0] == pt
        assert involutions(CURVE_C, tau2)[1] == pt

    def test_off_curve_rejected(self):
        with pytest.raises(ValueError):
            involutions(CURVE_C, (0, 0))

    def test_degenerate_fiber(self):
        # at r = 1 the quadratic in s drops degree; (1, 29/6) is on the curve
        pt = (F(1), F(29, 6))
        assert CURVE_C.contains(pt)
        with pytest.raises(DegenerateFiber):
            involutions(CURVE_C, pt)

    def test_random_points_square_to_identity(self, specs):
        # 100 distinct on-curve points reached from the lattice structure
        seen = 0
        for name, curve in [("Z8-scan-1", CURVE_C), ("Z2x6-scan-1", CURVE_D1)]:
            spec = specs[name]
            E = spec.parametrizer
            pts = []
            for n in range(-3, 4):
                for m in range(-3, 4):
                    T = spec.lattice_point(n, m)
                    try:
                        pts.append(spec.mapping.coordinates(T))
                    except DegenerateFiber:
                        continue
            for pt in pts:
                assert curve.contains(pt)
                try:
                    tau1, tau2 = involutions(curve, pt)
                except DegenerateFiber:
                    continue
                assert involutions(curve, tau1)[0] == pt
                assert involutions(curve, tau2)[1] == pt
                seen += 1
        assert seen >= 60


class TestQuarticCorrespondence:
    def test_first_scan_quartic(self):
        r = PolyQ.variable("r")
        q = quartic_correspondence(CURVE_C, "s").q
        assert q == 29 * r**4 + 62 * r * r + 3509

    def test_shared_quartics(self):
        assert (
            quartic_correspondence(CURVE_D1, "r").q
            == quartic_correspondence(CURVE_D2, "r").q
        )
        assert (
            quartic_correspondence(CURVE_D1, "s").q
            == quartic_correspondence(CURVE_D2, "s").q
        )

    def test_explicit_square_form(self):
        # s^2 = r^2 + 3r + 1 comes back unchanged
        C = BiquadraticCurve(((-1, 0, 1), (-3, 0, 0), (-1, 0, 0)))
        r = PolyQ.variable("r")
        assert quartic_correspondence(C, "s").q == r * r + 3 * r + 1


class TestParameterMap:
    def test_base_points(self, specs):
        assert specs["Z8-scan-1"].mapping.coordinates(INFINITY) == (F(-1), F(0))
        assert specs["Z8-scan-2"].mapping.parameter(INFINITY) == 0
        assert specs["Z2x6-scan-1"].mapping.coordinates(INFINITY) == (F(0), F(4))

    def test_validate(self, specs):
        for spec in specs.values():
            spec.validate()

    def test_images_on_correspondence(self, specs):
        for name, curve in [("Z8-scan-1", CURVE_C), ("Z2x6-scan-1", CURVE_D1)]:
            spec = specs[name]
            for n, m in [(1, 0), (0, 1), (1, 1), (-1, 1)]:
                try:
                    pt = spec.mapping.coordinates(spec.lattice_point(n, m))
                except DegenerateFiber:
                    continue
                assert curve.contains(pt)

    def test_negate_matches_inverse_point(self):
        spec = scan_spec_z8_first(radius=1, budget=BUD)
        neg = scan_spec_z8_first(radius=1, budget=BUD, negate=True)
        E = spec.parametrizer
        G = spec.generators[0]
        assert neg.mapping.parameter(G) == spec.mapping.parameter(E.mul(-1, G))

    def test_torsion_translates_give_isomorphic_members(self, specs):
        for name, spec in specs.items():
            E = spec.parametrizer
            G = spec.lattice_point(0, 1)
            base = spec.family.specialize(spec.mapping.parameter(G), BUD).curve()
            for T in spec.identified_translates:
                try:
                    param = spec.mapping.parameter(E.add(G, T))
                except DegenerateFiber:
                    continue
                other = spec.family.specialize(param, BUD).curve()
                assert isomorphic_over_Q(base, other) is not None


class TestLatticeScan:
    def test_origin_skipped(self, grids):
        for grid in grids.values():
            c = grid.cell(0, 0)
            assert c.skipped and c.root is None

    def test_counts_match_cells(self, grids):
        for grid in grids.values():
            plus = sum(1 for c in grid.cells if c.complete and c.root == 1)
            minus = sum(1 for c in grid.cells if c.complete and c.root == -1)
            skipped = sum(1 for c in grid.cells if c.skipped)
            incomplete = sum(
                1 for c in grid.cells if not c.skipped and not c.complete
            )
            assert grid.counts == (plus, minus, incomplete, skipped)

    def test_deterministic(self, specs, grids):
        spec = specs["Z2x6-scan-1"]
        again = lattice_scan(spec)
        assert again.to_csv() == grids["Z2x6-scan-1"].to_csv()
        assert again.to_json() == grids["Z2x6-scan-1"].to_json()

    def test_workers_do_not_change_output(self, specs, grids):
        spec = specs["Z2x6-scan-1"]
        assert lattice_scan(spec, workers=3).to_csv() == grids["Z2x6-scan-1"].to_csv()

    def test_csv_shape(self, grids):
        grid = grids["Z8-scan-1"]
        lines = grid.to_csv().strip().split("\n")
        assert lines[0] == "n,m,root,complete,skipped"
        assert len(lines) == 1 + (2 * grid.radius + 1) ** 2

    def test_json_mirror(self, grids):
        import json

        grid = grids["Z8-scan-2"]
        payload = json.loads(grid.to_json())
        assert payload["name"] == "Z8-scan-2"
        assert payload["counts"]["skipped"] == grid.counts[3]
        assert len(payload["cells"]) == (2 * grid.radius + 1) ** 2


class TestSymmetryAudit:
    def test_zero_violations(self, specs, grids):
        for name, grid in grids.items():
            rep = symmetry_audit(grid, specs[name].symmetry, spec=specs[name])
            assert rep.violations == ()
            assert rep.isomorphism_failures == ()
            assert rep.isomorphism_samples >= 1

    def test_identity_symmetry_trivial(self, grids):
        rep = symmetry_audit(grids["Z8-scan-1"], lambda n, m: (n, m))
        assert rep.violations == ()

    def test_fault_injection(self, specs, grids):
        grid = grids["Z8-scan-2"]
        spec = specs["Z8-scan-2"]
        a, b = spec.symmetry
        index = {(c.n, c.m): c for c in grid.cells}
        target = next(
            c
            for c in grid.cells
            if c.complete
            and c.root is not None
            and (a - c.n, b - c.m) != (c.n, c.m)
            and (a - c.n, b - c.m) in index
            and index[(a - c.n, b - c.m)].complete
            and index[(a - c.n, b - c.m)].root is not None
        )
        corrupted = tuple(
            replace(c, root=-c.root) if (c.n, c.m) == (target.n, target.m) else c
            for c in grid.cells
        )
        from ellfam.scan import _tally

        bad = ScanGrid(
            name=grid.name,
            radius=grid.radius,
            cells=corrupted,
            counts=_tally(corrupted),
        )
        rep = symmetry_audit(bad, spec.symmetry)
        assert len(rep.violations) == 1
