# src/engines/ZetaEngine/operations/theta.py
from src.engines.operations_base import BaseOperation, OperationKind
from src.model.engine_result import EngineResult
from src.services.zeta_service.assembly import igusa_theta


class Operation(BaseOperation):
    kind = OperationKind.DIRECT
    stage = "assembly"
    description = "Ряд Θ вдоль линейных струй: коэффициент t^n — [∇_{l_{n+1}} X] · L^(-dim X · (n+1))."
    params_schema = {
        "scheme": {"type": "SchemeSpec", "required": True},
        "order": {"type": "int", "required": True},
        "strategy": {"type": "ClassStrategy", "required": False},
        "closed_form": {"type": "str", "required": False},
    }
    outputs_schema = {"series": "dict", "coefficients": "list", "levels": "list", "rationality": "dict|null"}

    def run(self, params, context, engine):
        job = self.job(params)
        X = job.scheme.build()
        computation = igusa_theta(X, job.order, job.strategy, job.budgets)
        output = computation.to_json()
        output.update(engine.annotate(computation.series, job))
        return EngineResult.ok(
            stage=self.stage,
            output=output,
            summary=f"Θ до t^{job.order}",
        )
