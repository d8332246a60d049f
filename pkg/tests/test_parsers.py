from io import StringIO

import pytest

from fspace.errors import FormatError, InvalidPoset, NonBinaryEntry, NonSquare
from fspace.families import circle8, fence
from fspace.models.complex import SimplicialComplex
from fspace.models.poset import ZeroOneMatrix
from fspace.parsers import ActionParser, ActionSpec, ComplexParser, MatrixParser, PosetParser

S1_TEXT = """\
# circle
4
labels: a b c d
1 3
1 4
2 3
2 4
"""


class TestPosetParser:
    def test_parse(self, s1):
        assert PosetParser().apply_text(S1_TEXT) == s1

    def test_stream_input(self, s1):
        assert PosetParser().apply(StringIO(S1_TEXT)) == s1

    def test_closure_is_taken(self):
        p = PosetParser().apply_text("3\n1 2\n2 3\n")
        assert p.less(0, 2)

    def test_dump_writes_covers(self, s1):
        assert PosetParser().dump(s1) == "4\nlabels: a b c d\n1 3\n1 4\n2 3\n2 4\n"
        assert PosetParser().dump(fence(3)) == "3\n1 2\n3 2\n"

    def test_round_trip(self, s1):
        parser = PosetParser()
        for p in (s1, circle8(), fence(6)):
            assert parser.apply_text(parser.dump(p)) == p

    @pytest.mark.parametrize(
        "text, line",
        [
            ("three\n", 1),
            ("0\n", 1),
            ("2\n1 2 3\n", 2),
            ("2\n1 3\n", 2),
            ("2\n1 x\n", 2),
            ("2\n1 1\n", 2),
            ("2\nlabels: a\n", 2),
            ("2\n1 2\nlabels: a b\n", 3),
            ("2\nlabels: a a\n", 2),
        ],
        ids=[
            "count-not-int",
            "count-zero",
            "three-tokens",
            "out-of-range",
            "not-an-index",
            "self-relation",
            "label-count",
            "labels-after-relations",
            "duplicate-labels",
        ],
    )
    def test_format_errors(self, text, line):
        with pytest.raises(FormatError) as excinfo:
            PosetParser().apply_text(text)
        assert excinfo.value.line == line
        assert str(excinfo.value).startswith(f"line {line}: ")

    def test_empty_file(self):
        with pytest.raises(FormatError, match="missing point count"):
            PosetParser().apply_text("# nothing here\n\n")

    def test_cycle(self):
        with pytest.raises(FormatError, match="cycle") as excinfo:
            PosetParser().apply_text("3\n1 2\n# closes below\n2 3\n3 1\n")
        assert excinfo.value.line == 5
        assert isinstance(excinfo.value.__cause__, InvalidPoset)

    def test_not_utf8(self, tmp_path):
        path = tmp_path / "binary.poset"
        path.write_bytes(b"2\n\xff\xfe\n")
        with pytest.raises(FormatError, match="not UTF-8 text"):
            PosetParser().apply(path)


class TestMatrixParser:
    def test_parse(self):
        m = MatrixParser().apply_text("# comment\n01\n\n10\n")
        assert m == ZeroOneMatrix([[0, 1], [1, 0]])

    def test_spaces_are_ignored(self):
        assert MatrixParser().apply_text("0 1\n1 0\n").rows() == [[0, 1], [1, 0]]

    def test_dump(self):
        assert MatrixParser().dump(ZeroOneMatrix([[0, 0], [1, 0]])) == "00\n10\n"

    def test_not_square(self):
        with pytest.raises(NonSquare) as excinfo:
            MatrixParser().apply_text("01\n100\n")
        assert excinfo.value.line == 2

    def test_bad_character(self):
        with pytest.raises(NonBinaryEntry) as excinfo:
            MatrixParser().apply_text("02\n10\n")
        assert excinfo.value.line == 1

    def test_no_rows(self):
        with pytest.raises(FormatError):
            MatrixParser().apply_text("")


class TestComplexParser:
    def test_parse(self):
        k = ComplexParser().apply_text("a b\nb c\na c\n")
        assert k.vertices == ("a", "b", "c")
        assert k.f_vector() == [3, 3]

    def test_faces_of_facets_are_dropped(self):
        k = ComplexParser().apply_text("a b c\na b\n")
        assert k.facets == ((0, 1, 2),)

    def test_dump(self):
        k = SimplicialComplex.from_facets([["a", "b"], ["b", "c"]])
        assert ComplexParser().dump(k) == "a b\nb c\n"

    def test_repeated_vertex(self):
        with pytest.raises(FormatError) as excinfo:
            ComplexParser().apply_text("a b\nc c\n")
        assert excinfo.value.line == 2

    def test_no_facets(self):
        with pytest.raises(FormatError, match="no facets"):
            ComplexParser().apply_text("# empty\n")


class TestActionParser:
    def test_parse(self):
        spec = ActionParser().apply_text("e: 1 2 3 4\ng: 2 1 4 3\n")
        assert spec == ActionSpec(("e", "g"), ((0, 1, 2, 3), (1, 0, 3, 2)))

    def test_dump(self):
        spec = ActionSpec(("e", "g"), ((0, 1), (1, 0)))
        assert ActionParser().dump(spec) == "e: 1 2\ng: 2 1\n"

    @pytest.mark.parametrize(
        "text, message",
        [
            ("e 1 2\n", "expected 'name: images'"),
            ("e: 1 2\ng: 2\n", "expected 2 images"),
            ("e: 1 2\ne: 2 1\n", "listed twice"),
            ("e: 1 3\n", "out of range"),
            ("", "no elements"),
        ],
        ids=["no-colon", "short-row", "duplicate", "out-of-range", "empty"],
    )
    def test_format_errors(self, text, message):
        with pytest.raises(FormatError, match=message):
            ActionParser().apply_text(text)
