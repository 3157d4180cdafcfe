"""
Tests for USECASE_AnalyseCode.

Tests the code analysis workflow: code construction, certification, the
field condition, low-weight searches and trace classification.
"""

import pytest
from pydantic import ValidationError
from unittest.mock import Mock, AsyncMock

from src.app.core.codes.entities.ClassifiedWord import ClassifiedWord, MinWeightResult
from src.app.core.codes.features.analyseCode.schemas.INPUT_AnalyseCode import INPUT_AnalyseCode
from src.app.core.codes.features.analyseCode.services.SERVICE_AnalyseCode import (
    SERVICE_AnalyseCode,
)
from src.app.core.codes.features.analyseCode.usecases.USECASE_AnalyseCode import (
    USECASE_AnalyseCode,
)
from src.app.core.fields.entities.FieldCondition import FieldCondition
from src.app.core.geometry.entities.OrderParams import OrderParams
from src.app.core.geometry.exceptions.GeometryException import PolygonCertificationException
from src.app.core.origin.exceptions.AppException import CostGuardExceededException
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus
from src.app.core.traces.entities.DistanceTrace import TraceRef


def _line_word(points, is_line=True):
    return ClassifiedWord(
        weight=len(points), support=list(points), coefficients=[1] * len(points), is_line_multiple=is_line
    )


class TestUSECASE_AnalyseCode:

    @pytest.fixture
    def words(self, w2):
        """The 15 lines of W(2) as weight-3 words."""
        return [_line_word(sorted(line)) for line in w2.lines]

    @pytest.fixture
    def mock_code(self):
        """Code of length 15 and rank 10."""
        return Mock(length=15, rank=10, dual_dimension=5)

    @pytest.fixture
    def mock_helper(self, w2, w2_oracle, mock_code, words):
        """Mock helper for a certified W(2) over GF(3)."""
        helper = Mock()
        helper.load = AsyncMock(return_value=w2)
        helper.build_code = AsyncMock(return_value=mock_code)
        helper.certify = AsyncMock(return_value=(w2_oracle, OrderParams(n=4, s=2, t=2)))
        helper.field_condition = AsyncMock(return_value=FieldCondition(holds=True, failing_k=[], partial_sums=[]))
        helper.min_weight = AsyncMock(return_value=MinWeightResult(weight=3, words=words))
        helper.low_weight = AsyncMock(return_value=words[:4])

        def classify(geometry, oracle, found, s):
            for word in found:
                word.trace_match = TraceRef(d=1, x=15, y=20)
            return found

        helper.classify = AsyncMock(side_effect=classify)
        return helper

    @pytest.fixture
    def usecase(self, mock_helper):
        """Create usecase with mocked dependencies."""
        return USECASE_AnalyseCode(mock_helper, Mock())

    # ==================== Success Cases ====================

    @pytest.mark.asyncio
    async def test_execute_reports_code_parameters(self, usecase, mock_helper):
        """Length, rank and order come through without any search."""
        result = await usecase.execute(INPUT_AnalyseCode(path="w2.gpg", p=3))

        assert (result.length, result.rank, result.dual_dimension) == (15, 10, 5)
        assert (result.n, result.s, result.t) == (4, 2, 2)
        assert result.theorem_applicable is True
        assert result.words == []
        mock_helper.field_condition.assert_called_once_with(2, 2, 3)
        mock_helper.min_weight.assert_not_called()
        mock_helper.low_weight.assert_not_called()

    @pytest.mark.asyncio
    async def test_execute_min_weight(self, usecase, mock_helper):
        """The minimum-weight words become the output words."""
        result = await usecase.execute(INPUT_AnalyseCode(path="w2.gpg", p=3, min_weight=True))

        assert result.min_weight == 3
        assert len(result.words) == 15
        assert result.line_multiples == 15
        mock_helper.min_weight.assert_called_once()

    @pytest.mark.asyncio
    async def test_execute_w_max_takes_precedence_for_words(self, usecase, mock_helper):
        """With w_max the listed words come from the bounded search."""
        result = await usecase.execute(
            INPUT_AnalyseCode(path="w2.gpg", p=3, w_max=3, min_weight=True, allow_expensive=True)
        )

        assert len(result.words) == 4
        assert result.min_weight == 3
        mock_helper.low_weight.assert_called_once()
        assert mock_helper.low_weight.call_args.args[1:] == (3, True)

    @pytest.mark.asyncio
    async def test_execute_classify(self, usecase, mock_helper):
        """Classification counts words of weight s+1 per trace distance."""
        result = await usecase.execute(INPUT_AnalyseCode(path="w2.gpg", p=3, classify=True))

        assert result.classification == {1: 15}
        assert result.unclassified == 0
        assert result.anomalies() == []
        mock_helper.min_weight.assert_called_once()

    @pytest.mark.asyncio
    async def test_execute_field_condition_fails(self, usecase, mock_helper):
        """A failing field condition disables the theorem."""
        mock_helper.field_condition.return_value = FieldCondition(holds=False, failing_k=[1], partial_sums=[])

        result = await usecase.execute(INPUT_AnalyseCode(path="w2.gpg", p=3, min_weight=True))

        assert result.theorem_applicable is False
        assert result.anomalies() == []

    @pytest.mark.asyncio
    async def test_execute_uncertified_geometry(self, usecase, mock_helper):
        """Code data is still reported for a non-polygon."""
        mock_helper.certify.return_value = None

        result = await usecase.execute(INPUT_AnalyseCode(path="x.gpg", p=2, min_weight=True))

        assert result.s is None
        assert result.field_condition is None
        assert result.min_weight == 3

    # ==================== Anomaly Cases ====================

    @pytest.mark.asyncio
    async def test_execute_flags_unclassified_words(self, usecase, mock_helper):
        """Supports that are not traces are anomalies when the theorem applies."""
        mock_helper.classify.side_effect = lambda geometry, oracle, found, s: found

        result = await usecase.execute(INPUT_AnalyseCode(path="w2.gpg", p=3, classify=True))

        assert result.unclassified == 15
        assert "15 minimum-weight supports" in result.anomalies()[0]

    # ==================== Exception Cases ====================

    @pytest.mark.asyncio
    async def test_execute_classify_needs_a_polygon(self, usecase, mock_helper):
        """Traces are undefined without a certified even polygon."""
        mock_helper.certify.return_value = None

        with pytest.raises(PolygonCertificationException) as exc_info:
            await usecase.execute(INPUT_AnalyseCode(path="x.gpg", p=2, classify=True))

        assert exc_info.value.status == ServiceStatus.CERTIFICATION_FAILURE

    def test_w_max_must_be_positive(self):
        """w_max = 0 is rejected by the schema."""
        with pytest.raises(ValidationError):
            INPUT_AnalyseCode(path="w2.gpg", p=2, w_max=0)


class TestSERVICE_AnalyseCode:

    @pytest.fixture
    def mock_helper(self, w2, w2_oracle):
        helper = Mock()
        helper.load = AsyncMock(return_value=w2)
        helper.build_code = AsyncMock(return_value=Mock(length=15, rank=10, dual_dimension=5))
        helper.certify = AsyncMock(return_value=(w2_oracle, OrderParams(n=4, s=2, t=2)))
        helper.field_condition = AsyncMock(return_value=FieldCondition(holds=True, failing_k=[], partial_sums=[]))
        helper.min_weight = AsyncMock(return_value=MinWeightResult(weight=4, words=[]))
        return helper

    @pytest.fixture
    def service(self, mock_helper):
        return SERVICE_AnalyseCode(
            dependencies=ServiceDependency(logger=Mock(), workers=Mock()),
            helpers={SERVICE_AnalyseCode.HELPER_KEY: mock_helper},
        )

    # ==================== Status Mapping ====================

    @pytest.mark.asyncio
    async def test_wrong_minimum_weight_is_an_anomaly(self, service):
        """Weight 4 contradicts s+1 = 3."""
        output = await service.run(ServiceInput(data=INPUT_AnalyseCode(path="w2.gpg", p=3, min_weight=True)))

        assert output.status == ServiceStatus.ANOMALY
        assert "minimum weight 4 differs from s+1 = 3" in output.error_message

    @pytest.mark.asyncio
    async def test_cost_guard(self, service, mock_helper):
        """A refused search exits 3."""
        mock_helper.min_weight.side_effect = CostGuardExceededException("w_max=5 exceeds s+2=4")

        output = await service.run(ServiceInput(data=INPUT_AnalyseCode(path="w2.gpg", p=3, min_weight=True)))

        assert output.status == ServiceStatus.COST_GUARD_EXCEEDED
        assert output.exit_code == 3
