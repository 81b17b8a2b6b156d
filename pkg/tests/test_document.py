"""Line-oriented document format: parsing, canonical serialization,
and positioned error reporting."""

import math
from pathlib import Path

import pytest

from dessins import catalog
from dessins.document import (
    DessinDocument,
    DocumentParseError,
    FORMAT_VERSION,
    canonicalize,
    from_dessin,
    from_tricolored,
    parse,
)
from dessins.metric import MetricData, equilateral_structure, square_structure

FIXTURES = Path(__file__).parent / "fixtures"

GOOD_FIXTURES = [
    "one_square_torus.dessin",
    "tetrahedron.dessin",
    "grid_2x2.dessin",
    "pillow_sphere.dessin",
    "octahedron_tricolored.dessin",
]


def make_text(**overrides) -> str:
    """A small valid document with selected lines replaced or dropped
    (value None).  Keys keep their position so line numbers stay
    predictable: 1 format_version, 2 n_darts, 3 rho0, 4 rho1."""
    fields = {
        "format_version": "1",
        "n_darts": "4",
        "rho0": "1 2 3 0",
        "rho1": "2 3 0 1",
    }
    fields.update(overrides)
    return "".join(f"{k}: {v}\n" for k, v in fields.items()
                   if v is not None)


class TestParsing:
    def test_minimal_document(self):
        d_doc = parse(make_text())
        assert d_doc.n_darts == 4
        assert d_doc.rho0 == (1, 2, 3, 0)
        assert d_doc.rho1 == (2, 3, 0, 1)
        assert d_doc.format_version == FORMAT_VERSION
        assert not d_doc.has_metric
        assert not d_doc.has_coloring
        assert d_doc.to_metric() is None

    def test_comments_and_blanks_ignored(self):
        text = ("# leading comment\n\nformat_version: 1\n"
                "\n  # indented comment\nn_darts: 4\n"
                "rho0: 1 2 3 0\nrho1: 2 3 0 1\n")
        assert parse(text) == parse(make_text())

    def test_whitespace_tolerant(self):
        text = ("  format_version :  1  \nn_darts:4\n"
                "rho0:  1  2 3 0\nrho1: 2 3 0 1")
        assert parse(text) == parse(make_text())

    def test_good_fixtures_parse(self):
        for name in GOOD_FIXTURES:
            d_doc = parse((FIXTURES / name).read_text())
            dessin = d_doc.to_dessin()
            assert dessin.is_valid(), name

    def test_metric_block(self):
        d_doc = parse((FIXTURES / "tetrahedron.dessin").read_text())
        assert d_doc.has_metric
        m = d_doc.to_metric()
        assert m.lengths == (1.0,) * 12
        assert m.angles == (math.pi / 3,) * 12

    def test_coloring_block(self):
        d_doc = parse((FIXTURES / "octahedron_tricolored.dessin").read_text())
        assert d_doc.has_coloring
        tri = d_doc.to_tricolored()
        assert len(tri.edge_color) == 12
        assert len(tri.face_shade) == 8
        assert len(tri.vertex_label) == 6

    def test_to_tricolored_requires_coloring(self):
        with pytest.raises(ValueError, match="no coloring block"):
            parse(make_text()).to_tricolored()


class TestParseErrors:
    def error(self, text: str) -> DocumentParseError:
        with pytest.raises(DocumentParseError) as info:
            parse(text)
        return info.value

    def test_missing_colon(self):
        err = self.error("format_version 1\n")
        assert err.line == 1
        assert "key: value" in str(err)

    def test_unknown_key(self):
        err = self.error(make_text() + "flavor: mint\n")
        assert err.line == 5
        assert "unknown key 'flavor'" in str(err)

    def test_duplicate_key(self):
        err = self.error(make_text() + "rho0: 1 2 3 0\n")
        assert err.line == 5
        assert "duplicate key 'rho0'" in str(err)

    def test_missing_key_reported_at_end(self):
        err = self.error(make_text(rho1=None))
        assert err.line == 4
        assert "missing required key 'rho1'" in str(err)

    def test_unsupported_version(self):
        err = self.error(make_text(format_version="7"))
        assert err.line == 1
        assert "unsupported format_version '7'" in str(err)

    def test_bad_dart_count(self):
        assert self.error(make_text(n_darts="four")).line == 2
        assert "must be positive" in str(self.error(make_text(
            n_darts="0", rho0="", rho1="")))

    def test_wrong_entry_count(self):
        err = self.error(make_text(rho0="1 2 3"))
        assert err.line == 3
        assert "expected 4 entries, got 3" in str(err)

    def test_non_integer_entry(self):
        err = self.error(make_text(rho1="2 3 x 1"))
        assert err.line == 4
        assert "rho1[2]" in str(err)

    def test_out_of_range_entry_fixture(self):
        # fixture layout: comment, version, n_darts, rho0
        err = self.error((FIXTURES / "bad_out_of_range.dessin").read_text())
        assert err.line == 4
        assert "rho0[2] = 9 out of range 0..3" in str(err)

    def test_half_metric_block(self):
        err = self.error(make_text() + "lengths: 1 1 1 1\n")
        assert err.line == 5
        assert "requires 'angles'" in str(err)

    def test_bad_length_value(self):
        err = self.error(make_text()
                         + "lengths: 1 1 ? 1\nangles: 1 1 1 1\n")
        assert err.line == 5
        assert "lengths[2]" in str(err)

    def test_partial_coloring_block(self):
        err = self.error(make_text() + "edge_colors: blue blue\n")
        assert "coloring block requires" in str(err)

    def test_bad_color_value(self):
        text = (make_text()
                + "edge_colors: blue mauve\n"
                + "face_shades: white\n"
                + "vertex_labels: zero one\n")
        err = self.error(text)
        assert err.line == 5
        assert "'mauve' is not one of" in str(err)

    def test_free_edge_fixture_parses_but_fails_validation(self):
        # structural defects are a validation concern, not a parse error
        d_doc = parse((FIXTURES / "free_edge.dessin").read_text())
        codes = [v.code for v in d_doc.to_dessin().violations()]
        assert "rho1-fixed-point" in codes


class TestSerialization:
    def test_round_trip_plain(self):
        d_doc = from_dessin(catalog.tetrahedron())
        assert parse(d_doc.serialize()) == d_doc

    def test_round_trip_with_metric(self):
        dessin = catalog.square_torus_grid(2, 2)
        d_doc = from_dessin(dessin, square_structure(dessin))
        again = parse(d_doc.serialize())
        assert again == d_doc
        # repr round-trips floats exactly
        assert again.angles == d_doc.angles

    def test_round_trip_tricolored(self):
        d_doc = from_tricolored(catalog.octahedron_tricolored())
        assert parse(d_doc.serialize()) == d_doc

    def test_canonicalize_idempotent_on_fixtures(self):
        for name in GOOD_FIXTURES:
            once = canonicalize((FIXTURES / name).read_text())
            assert canonicalize(once) == once, name

    def test_canonicalize_drops_comments(self):
        text = "# hello\n" + make_text() + "# bye\n"
        assert "#" not in canonicalize(text)

    def test_serialize_layout(self):
        text = from_dessin(catalog.one_square_torus()).serialize()
        assert text == ("format_version: 1\n"
                        "n_darts: 4\n"
                        "rho0: 1 2 3 0\n"
                        "rho1: 2 3 0 1\n")

    def test_metric_must_fit(self):
        dessin = catalog.tetrahedron()
        wrong_size = MetricData((1.0,) * 4, (2.0,) * 4)
        with pytest.raises(ValueError, match="metric does not fit"):
            from_dessin(dessin, wrong_size)
        # dart 0 and its reverse must share a length
        uneven = MetricData((2.0,) + (1.0,) * 11, (1.0,) * 12)
        with pytest.raises(ValueError, match="metric does not fit"):
            from_dessin(dessin, uneven)

    def test_equilateral_metric_fits(self):
        dessin = catalog.tetrahedron()
        d_doc = from_dessin(dessin, equilateral_structure(dessin))
        assert d_doc.has_metric


class TestBlockPairing:
    def test_lengths_without_angles(self):
        with pytest.raises(ValueError, match="together"):
            DessinDocument(4, (1, 2, 3, 0), (2, 3, 0, 1),
                           lengths=(1.0,) * 4)

    def test_partial_coloring(self):
        with pytest.raises(ValueError, match="together"):
            DessinDocument(4, (1, 2, 3, 0), (2, 3, 0, 1),
                           edge_colors=("blue", "red"))

    def test_error_carries_line_attribute(self):
        err = DocumentParseError(17, "boom")
        assert err.line == 17
        assert str(err) == "line 17: boom"
