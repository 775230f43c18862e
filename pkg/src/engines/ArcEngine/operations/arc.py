# src/engines/ArcEngine/operations/arc.py
from src.engines.operations_base import BaseOperation, OperationKind
from src.model.engine_result import EngineResult
from src.services.arc_service.arcs import arc_space


class Operation(BaseOperation):
    kind = OperationKind.DIRECT
    stage = "construction"
    description = "Пространство дуг схемы над толстой точкой (линейной l_m или заданной уравнениями)."
    params_schema = {
        "scheme": {"type": "SchemeSpec", "required": True},
        "fat": {"type": "FatPointSpec", "required": True},
    }
    outputs_schema = {"source": "dict", "fat": "dict", "grid": "list", "generators": "list", "provenance": "dict"}

    def run(self, params, context, engine):
        job = self.job(params)
        X, _ = engine.scheme_and_point(job)
        fat = job.fat.build(X.ring.field)
        presentation = arc_space(X, fat, job.budgets.groebner)
        return EngineResult.ok(
            stage=self.stage,
            output=presentation.to_json(),
            summary=(
                f"Пространство дуг: {len(presentation.variables)} переменных, "
                f"{len(presentation.generators)} уравнений"
            ),
        )
