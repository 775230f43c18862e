# src/engines/ArcEngine/operations/auto.py
from src.engines.operations_base import BaseOperation, OperationKind
from src.model.engine_result import EngineResult
from src.services.arc_service.arcs import auto_arc


class Operation(BaseOperation):
    kind = OperationKind.DIRECT
    stage = "construction"
    description = (
        "Пространство автодуг A_n(X, p): дуги n-струи над самой собой. "
        "provenance.flat_index хранит плоскую нумерацию a0, a1, ... для сверки с таблицами."
    )
    params_schema = {
        "scheme": {"type": "SchemeSpec", "required": True},
        "order": {"type": "int", "required": True},
    }
    outputs_schema = {"source": "dict", "fat": "dict", "grid": "list", "generators": "list", "provenance": "dict"}

    def run(self, params, context, engine):
        job = self.job(params)
        X, point = engine.scheme_and_point(job)
        presentation = auto_arc(X, point, job.order, job.budgets.groebner)
        return EngineResult.ok(
            stage=self.stage,
            output=presentation.to_json(),
            summary=(
                f"A_{job.order}: длина струи {presentation.fat.length}, "
                f"{len(presentation.generators)} уравнений"
            ),
        )
