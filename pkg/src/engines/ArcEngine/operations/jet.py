# src/engines/ArcEngine/operations/jet.py
from src.engines.operations_base import BaseOperation, OperationKind
from src.model.engine_result import EngineResult
from src.services.arc_service.arcs import jet


class Operation(BaseOperation):
    kind = OperationKind.DIRECT
    stage = "construction"
    description = "n-струя схемы в точке: фактор по (I сдвинутой схемы) + m^n; длина, базис, образующие."
    params_schema = {
        "scheme": {"type": "SchemeSpec", "required": True},
        "order": {"type": "int", "required": True},
    }
    outputs_schema = {"name": "str", "length": "int", "variables": "list", "generators": "list", "basis": "list"}

    def run(self, params, context, engine):
        job = self.job(params)
        X, point = engine.scheme_and_point(job)
        fat = jet(X, point, job.order, job.budgets.groebner)
        return EngineResult.ok(
            stage=self.stage,
            output=fat.to_json(),
            summary=f"Струя порядка {job.order}: длина {fat.length}",
        )
