import random
from fractions import Fraction

import pytest

from models import Ensemble, Povm, QubitOperator
from ensemble import (
    EnsembleSemanticError,
    EnsembleSyntaxError,
    InvalidEnsembleError,
    UnknownBuiltinError,
    builtin,
    builtin_names,
    parse,
    require_valid,
    serialize,
    validate,
)
from utils import EnsembleLoader
from tests.helpers import random_ensemble

HALF = Fraction(1, 2)


class TestValidate:

    def test_identity_alone_is_valid(self):
        """Test {I} is a valid POVM."""
        e = Ensemble(name="id", povms=[Povm(elements=[QubitOperator.identity()])])
        assert validate(e).valid

    def test_single_projector_reports_deficit(self):
        """Test a lone projector does not sum to the identity."""
        e = Ensemble(name="p", povms=[Povm(elements=[QubitOperator.projector("z")])])
        report = validate(e)

        assert not report.valid
        assert report.issues[0].deficit == QubitOperator.of(HALF, 0, 0, -HALF)

    def test_not_psd_slot(self):
        """Test a non-PSD element is reported by slot even when the sum is right."""
        bad = QubitOperator.of(HALF, 0, 0, 1)
        e = Ensemble(name="bad", povms=[Povm(elements=[bad, QubitOperator.of(HALF, 0, 0, -1)])])
        report = validate(e)

        assert report.issues[0].not_psd == [0, 1]
        assert report.issues[0].deficit is None

    def test_zero_element_needs_flag(self):
        """Test the zero operator is rejected unless allowed."""
        e = Ensemble(name="z", povms=[Povm(elements=[QubitOperator.identity(), QubitOperator.zero()])])
        assert validate(e).issues[0].zero == [1]
        assert validate(e, allow_zero_elements=True).valid

    def test_empty_ensemble_and_povm(self):
        """Test empty ensembles and empty POVMs are invalid."""
        assert validate(Ensemble(name="none", povms=[])).empty
        report = validate(Ensemble(name="hollow", povms=[Povm(elements=[])]))
        assert report.issues[0].empty
        assert not report.valid

    def test_require_valid_raises_with_report(self):
        """Test require_valid carries the report on failure."""
        e = Ensemble(name="p", povms=[Povm(elements=[QubitOperator.projector("x")])])
        with pytest.raises(InvalidEnsembleError) as info:
            require_valid(e)
        assert info.value.report.ensemble == "p"
        assert "deficit" in str(info.value)


class TestBuiltins:

    def test_names(self):
        """Test the builtin list."""
        assert builtin_names() == ["one", "half-half", "cabello-xyz", "half-split"]

    @pytest.mark.parametrize("name", ["one", "half-half", "cabello-xyz", "half-split"])
    def test_builtins_are_valid(self, name):
        """Test every builtin validates."""
        assert validate(builtin(name)).valid

    def test_shapes(self):
        """Test builtin shapes."""
        assert builtin("one").shape == [1]
        assert builtin("half-half").shape == [2]
        assert builtin("cabello-xyz").shape == [4, 4, 4]
        assert builtin("half-split").shape == [3, 3, 4]

    def test_cabello_first_povm(self):
        """Test cabello-xyz starts with the z and x half projectors."""
        first = builtin("cabello-xyz").povms[0].elements
        quarter = Fraction(1, 4)
        assert first == [
            QubitOperator.of(quarter, 0, 0, quarter),
            QubitOperator.of(quarter, 0, 0, -quarter),
            QubitOperator.of(quarter, quarter, 0, 0),
            QubitOperator.of(quarter, -quarter, 0, 0),
        ]

    def test_unknown(self):
        """Test an unknown builtin raises."""
        with pytest.raises(UnknownBuiltinError):
            builtin("cabello")


class TestCodec:

    def setup_method(self):
        """Setup test fixtures."""
        self.text = (
            'ensemble "half-half"\n'
            "povm\n"
            "element 1/2 0 0 0\n"
            "element 1/2 0 0 0\n"
        )

    def test_serialize(self):
        """Test the canonical text of half-half."""
        assert serialize(builtin("half-half")) == self.text

    def test_parse(self):
        """Test parsing gives back half-half."""
        assert parse(self.text) == builtin("half-half")

    def test_comments_and_blank_lines(self):
        """Test comments and blank lines are ignored."""
        text = '# header\nensemble "x # not a comment"  # trailing\n\npovm\nelement 1 0 0 0 # identity\n'
        e = parse(text)
        assert e.name == "x # not a comment"
        assert e.povms[0].elements == [QubitOperator.identity()]

    def test_round_trip_builtins(self):
        """Test parse(serialize(e)) == e for every builtin."""
        for name in builtin_names():
            e = builtin(name)
            assert parse(serialize(e)) == e

    def test_round_trip_random(self):
        """Test the round trip on random valid ensembles, and text stability."""
        rng = random.Random(23)
        for index in range(100):
            e = random_ensemble(rng, name=f"random {index} \"quoted\"")
            text = serialize(e)
            assert parse(text) == e
            assert serialize(parse(text)) == text

    def test_bad_rational_is_syntax_error(self):
        """Test 1/0 reports its line and column."""
        with pytest.raises(EnsembleSyntaxError) as info:
            parse('ensemble "x"\npovm\nelement 1/0 0 0 0\n')
        assert info.value.line == 3
        assert info.value.column == 9

    def test_unknown_statement(self):
        """Test an unknown keyword is a syntax error."""
        with pytest.raises(EnsembleSyntaxError):
            parse('ensemble "x"\nmeasure\n')

    def test_wrong_arity(self):
        """Test an element with three coefficients is a semantic error."""
        with pytest.raises(EnsembleSemanticError) as info:
            parse('ensemble "x"\npovm\nelement 1 0 0\n')
        assert info.value.line == 3

    def test_element_outside_povm(self):
        """Test an element before any povm line."""
        with pytest.raises(EnsembleSemanticError):
            parse('ensemble "x"\nelement 1 0 0 0\n')

    def test_missing_and_duplicate_header(self):
        """Test the ensemble statement is required exactly once."""
        with pytest.raises(EnsembleSemanticError):
            parse("povm\nelement 1 0 0 0\n")
        with pytest.raises(EnsembleSemanticError):
            parse('ensemble "a"\nensemble "b"\n')

    def test_unquoted_name(self):
        """Test an unquoted name is a syntax error."""
        with pytest.raises(EnsembleSyntaxError):
            parse("ensemble a\n")

    def test_parse_does_not_validate(self):
        """Test an invalid ensemble still parses."""
        e = parse('ensemble "p"\npovm\nelement 1/2 0 0 1/2\n')
        assert not validate(e).valid


class TestEnsembleLoader:

    def test_builtin_source(self):
        """Test loading a builtin by name."""
        assert EnsembleLoader(builtin_name="one").load() == builtin("one")

    def test_file_source(self, tmp_path):
        """Test loading from a file."""
        path = tmp_path / "cabello.txt"
        path.write_text(serialize(builtin("cabello-xyz")), encoding="utf-8")
        assert EnsembleLoader(path=str(path)).load() == builtin("cabello-xyz")

    def test_exactly_one_source(self):
        """Test both or neither source raises."""
        with pytest.raises(ValueError):
            EnsembleLoader()
        with pytest.raises(ValueError):
            EnsembleLoader(path="x.txt", builtin_name="one")

    def test_missing_file(self, tmp_path):
        """Test a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            EnsembleLoader(path=str(tmp_path / "missing.txt")).load()
