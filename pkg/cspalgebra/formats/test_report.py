"""Tests for JSON reports."""

import pytest

from cspalgebra.domain.models import Instance
from cspalgebra.domain_service import classify_template
from cspalgebra.fixtures.catalog import EDGE, horn, k2, k3, two_sat
from cspalgebra.formats import (
    ReportDocument,
    ReportError,
    SolutionModel,
    StructureModel,
    VerdictModel,
    dump_report,
    load_report,
    verify_report,
)
from cspalgebra.formats.report import identity_system


def report_for(*fixtures) -> ReportDocument:
    verdicts = []
    for fixture in fixtures:
        s = fixture()
        verdicts.append(VerdictModel.of(classify_template(s, fixture.__name__), s))
    return ReportDocument(command="classify", verdicts=verdicts)


class TestReportDocument:
    """Tests for dumping and loading reports."""

    def test_dump_load(self):
        doc = report_for(two_sat)
        loaded = load_report(dump_report(doc))
        assert loaded == load_report(dump_report(loaded))
        assert loaded.verdicts[0].tractable.status == "yes"
        assert loaded.verdicts[0].tractable.witness is not None

    def test_dump_is_deterministic(self):
        assert dump_report(report_for(horn)) == dump_report(report_for(horn))

    def test_invalid_json(self):
        with pytest.raises(ReportError):
            load_report('{"verdicts": 3}')

    def test_unsupported_version(self):
        with pytest.raises(ReportError):
            load_report('{"schema_version": 99, "command": "classify"}')

    def test_structure_model_roundtrip(self):
        assert StructureModel.of(horn()).to_structure() == horn()


class TestIdentitySystem:
    """Tests for identity_system."""

    @pytest.mark.parametrize("name", ["siggers", "wnu(3)", "cyclic(5)", "none(4)"])
    def test_names(self, name):
        assert identity_system(name, "f").name == name

    def test_unknown(self):
        with pytest.raises(ReportError):
            identity_system("majority", "f")


class TestVerifyReport:
    """Tests for verify_report."""

    def test_classifier_witnesses_pass(self):
        doc = load_report(dump_report(report_for(two_sat, horn, k3)))
        assert verify_report(doc) == []

    def test_tampered_table_is_reported(self):
        doc = report_for(two_sat)
        witness = doc.verdicts[0].dual_discriminator.witness
        witness.operations[0].table = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
        problems = verify_report(doc)
        assert len(problems) == 1
        assert "dual_discriminator" in problems[0]

    def test_unknown_identities_are_reported(self):
        doc = report_for(two_sat)
        doc.verdicts[0].tractable.witness.identities = "mystery"
        assert len(verify_report(doc)) == 1

    def test_solutions_are_rechecked(self):
        x = Instance.create(2, k2().signature, {EDGE: [(0, 1)]})
        good = SolutionModel(
            template_id="k2",
            strategy="search",
            attempted=["search"],
            solved=True,
            assignment=[0, 1],
            template=StructureModel.of(k2()),
            instance=StructureModel.of(x),
        )
        bad = good.model_copy(update={"assignment": [1, 1]})
        doc = ReportDocument(command="solve", solutions=[good, bad])
        problems = verify_report(doc)
        assert problems == ["k2: assignment is not a solution"]
