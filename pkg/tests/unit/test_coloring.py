import random
from fractions import Fraction

import pytest

from models import ClassDescriptor, ColoringProblem, Ensemble, Povm, QubitOperator
from models.configs import SolverConfig
from operators import scale
from ensemble import InvalidEnsembleError, builtin
from coloring import (
    BacktrackingSolver,
    BruteForceSolver,
    HeavyNoAssignableError,
    InadmissibleEnsembleError,
    SolverFactory,
    TooLargeError,
    brute_force,
    build_record,
    check_admissible,
    decide,
    identify,
    parity_witness,
    recheck,
    solve,
)
from minimality import pattern_problem
from tests.helpers import random_ensemble, random_pattern

HALF = Fraction(1, 2)


class TestIdentify:

    def test_half_half_identical(self):
        """Test equal elements in one POVM share a class with multiplicity 2."""
        p = identify(builtin("half-half"), "identical")
        assert p.class_count == 1
        assert p.incidence == [((0, 2),)]
        assert p.classes[0].operator == QubitOperator.of(HALF)

    def test_half_half_distinct(self):
        """Test per-slot classes under distinct semantics."""
        p = identify(builtin("half-half"), "distinct")
        assert p.class_count == 2
        assert p.incidence == [((0, 1), (1, 1))]
        assert [c.rank for c in p.classes] == [0, 1]

    def test_cabello_distinct(self):
        """Test six classes, each in exactly two POVMs."""
        p = identify(builtin("cabello-xyz"), "distinct")
        assert p.class_count == 6
        assert p.appearance_counts() == [2] * 6
        assert all(len(row) == 4 for row in p.incidence)

    def test_rank_matching_across_povms(self):
        """Test the k-th copy of an operator matches the k-th copy elsewhere."""
        quarter = scale(QubitOperator.identity(), Fraction(1, 4))
        e = Ensemble(name="quarters", povms=[
            Povm(elements=[quarter] * 4),
            Povm(elements=[quarter, quarter, QubitOperator.of(HALF)]),
        ])
        p = identify(e, "distinct")
        # quarter ranks 0..3, then I/2
        assert p.class_count == 5
        assert p.incidence[1] == ((0, 1), (1, 1), (4, 1))

    def test_invalid_ensemble(self):
        """Test identify validates first."""
        e = Ensemble(name="p", povms=[Povm(elements=[QubitOperator.projector("z")])])
        with pytest.raises(InvalidEnsembleError):
            identify(e, "distinct")

    def test_nonproportional_rejects_half_half(self):
        """Test I/2, I/2 is inadmissible with gamma 1."""
        with pytest.raises(InadmissibleEnsembleError) as info:
            identify(builtin("half-half"), "nonproportional")
        assert info.value.povm == 0
        assert info.value.slots == (0, 1)
        assert info.value.gamma == 1

    def test_cabello_admissible(self):
        """Test all 18 within-POVM pairs of cabello-xyz are non-proportional."""
        assert check_admissible(builtin("cabello-xyz")) == 18

    def test_nonproportional_equals_identical(self):
        """Test identical and nonproportional give the same problem on admissible input."""
        for name in ("one", "cabello-xyz", "half-split"):
            e = builtin(name)
            assert identify(e, "nonproportional") == identify(e, "identical")

    def test_heavy_marks_light_classes(self):
        """Test heavy semantics assigns only elements with norm above 1/2."""
        light = scale(QubitOperator.projector("z", -1), HALF)
        e = Ensemble(name="mixed", povms=[Povm(elements=[QubitOperator.projector("z"), light, light])])
        p = identify(e, "heavy")

        assert [c.assignable for c in p.classes] == [False, True]
        verdict = solve(p)
        assert verdict.colorable
        assert verdict.certificate == [False, True]

    def test_heavy_without_assignable_slot(self):
        """Test a POVM of light elements raises."""
        with pytest.raises(HeavyNoAssignableError) as info:
            identify(builtin("cabello-xyz"), "heavy")
        assert info.value.povm == 0

    def test_zero_elements_allowed(self):
        """Test zero elements pass with the flag and skip the proportionality check."""
        e = Ensemble(name="z", povms=[Povm(elements=[QubitOperator.identity(), QubitOperator.zero()])])
        p = identify(e, "nonproportional", allow_zero_elements=True)
        assert solve(p).colorable


class TestVerdicts:

    def test_examples(self):
        """Test the basic colorability verdicts."""
        assert not solve(identify(builtin("half-half"), "identical")).colorable
        assert solve(identify(builtin("half-half"), "distinct")).colorable
        assert not solve(identify(builtin("cabello-xyz"), "distinct")).colorable
        assert solve(identify(builtin("one"), "identical")).colorable

    def test_first_certificate(self):
        """Test the search tries "no" first, so half-half gets its second slot."""
        verdict = solve(identify(builtin("half-half"), "distinct"))
        assert verdict.certificate == [False, True]
        assert verdict.witness is None

    def test_brute_force_counts(self):
        """Test the oracle enumerates every assignment before giving up."""
        cabello = brute_force(identify(builtin("cabello-xyz"), "distinct"))
        assert not cabello.colorable
        assert cabello.witness.assignments_checked == 64

        half = brute_force(identify(builtin("half-half"), "identical"))
        assert half.witness.assignments_checked == 2

    def test_brute_force_guard(self):
        """Test the class-count guard."""
        p = ColoringProblem(
            classes=[ClassDescriptor(label=i) for i in range(26)],
            incidence=[tuple((i, 1) for i in range(26))],
            targets=[1],
        )
        with pytest.raises(TooLargeError):
            brute_force(p)
        assert brute_force(p, max_classes=30).colorable is True

    def test_parity_examples(self):
        """Test the parity witness fires exactly where expected."""
        cabello = parity_witness(identify(builtin("cabello-xyz"), "distinct"))
        assert cabello.class_counts == [2] * 6
        assert cabello.povm_count == 3

        half = parity_witness(identify(builtin("half-half"), "identical"))
        assert half.class_counts == [2]
        assert half.povm_count == 1

        assert parity_witness(identify(builtin("half-half"), "distinct")) is None

    def test_decide_reports_mechanism(self):
        """Test decide prefers the parity argument."""
        assert decide(identify(builtin("cabello-xyz"), "distinct")).witness_kind == "parity"
        assert decide(identify(builtin("half-split"), "distinct")).witness_kind == "parity"
        assert decide(identify(builtin("one"), "identical")).colorable

    def test_recheck(self):
        """Test certificate re-checking."""
        p = identify(builtin("half-half"), "distinct")
        assert recheck(p, [False, True])
        assert recheck(p, [True, False])
        assert not recheck(p, [True, True])
        assert not recheck(p, [False])

    def test_record(self):
        """Test the run record fields and order."""
        p = identify(builtin("half-half"), "distinct")
        record = build_record("half-half", "distinct", p, solve(p))
        assert record.model_dump_json() == (
            '{"ensemble":"half-half","semantics":"distinct","classes":2,'
            '"verdict":"colorable","witness":null,"certificate":[0,1]}'
        )


class TestSolverFactory:

    def test_strategies(self):
        """Test the factory builds each strategy."""
        assert isinstance(SolverFactory.create("backtracking"), BacktrackingSolver)
        assert isinstance(SolverFactory.create("brute-force", SolverConfig()), BruteForceSolver)

    def test_unknown_strategy_falls_back(self):
        """Test an unknown strategy falls back to backtracking."""
        assert SolverFactory.create("dlx").name == "backtracking"


class TestProperties:

    def setup_method(self):
        """Setup test fixtures."""
        self.rng = random.Random(2024)

    def test_oracle_agreement_on_ensembles(self):
        """Test solve and brute_force agree on random ensembles under every semantics."""
        checked = 0
        for _ in range(200):
            e = random_ensemble(self.rng)
            for semantics in ("identical", "distinct", "nonproportional", "heavy"):
                try:
                    p = identify(e, semantics)
                except (InadmissibleEnsembleError, HeavyNoAssignableError):
                    continue
                fast, slow = solve(p), brute_force(p)
                assert fast.colorable == slow.colorable
                if fast.colorable:
                    assert recheck(p, fast.certificate)
                    assert recheck(p, slow.certificate)
                checked += 1
        assert checked >= 400

    def test_oracle_agreement_on_patterns(self):
        """Test solve and brute_force agree on random label patterns."""
        for _ in range(500):
            p = pattern_problem(random_pattern(self.rng))
            fast, slow = solve(p), brute_force(p)
            assert fast.colorable == slow.colorable
            if fast.colorable:
                assert recheck(p, fast.certificate)

    def test_parity_is_sound(self):
        """Test a parity witness always comes with an Uncolorable search verdict."""
        fired = 0
        for _ in range(500):
            p = pattern_problem(random_pattern(self.rng))
            if parity_witness(p) is not None:
                fired += 1
                assert not solve(p).colorable
        assert fired > 0

    def test_two_povm_ensembles_colorable(self):
        """Test any valid two-POVM ensemble is colorable under distinct semantics."""
        for _ in range(100):
            e = random_ensemble(self.rng, max_povms=2)
            assert solve(identify(e, "distinct")).colorable

    def test_monotonic_under_fresh_povm(self):
        """Test adding a POVM of all-new classes keeps a colorable problem colorable."""
        for _ in range(100):
            p = identify(random_ensemble(self.rng), "distinct")
            if not solve(p).colorable:
                continue
            size = self.rng.randint(1, 4)
            fresh = tuple((p.class_count + i, 1) for i in range(size))
            extended = ColoringProblem(
                classes=p.classes + [ClassDescriptor(label=i) for i in range(size)],
                incidence=p.incidence + [fresh],
                targets=p.targets + [1],
            )
            assert solve(extended).colorable
