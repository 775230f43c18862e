# src/engines/ZetaEngine/operations/zeta.py
from src.engines.operations_base import BaseOperation, OperationKind
from src.model.engine_result import EngineResult
from src.services.zeta_service.assembly import DefectReport, compute_auto_zeta, printed_defect_at


class Operation(BaseOperation):
    kind = OperationKind.DIRECT
    stage = "assembly"
    description = (
        "Редуцированный авто-ряд до t^N: коэффициент t^n — класс A_{n+1}^red, "
        "нормированный по определению (dim·ℓ) или по размерности (codim)."
    )
    params_schema = {
        "scheme": {"type": "SchemeSpec", "required": True},
        "order": {"type": "int", "required": True},
        "normalization": {"type": "definition|codim", "required": False},
        "strategy": {"type": "ClassStrategy", "required": False},
        "closed_form": {"type": "str", "required": False},
    }
    outputs_schema = {
        "normalization": "str",
        "series": "dict",
        "coefficients": "list",
        "levels": "list",
        "defect": "dict",
        "rationality": "dict|null",
        "comparison": "dict",
        "table": "str",
    }

    def run(self, params, context, engine):
        job = self.job(params)
        X = job.scheme.build()
        computation = compute_auto_zeta(
            X, job.scheme.point, job.order, job.normalization, job.strategy, job.budgets,
        )
        tail = [level for level in computation.levels if level.order >= 2 and level.dimension >= 0]
        defect = DefectReport(
            orders=[level.order for level in tail],
            dimensions=[level.dimension for level in tail],
            lengths=[level.length for level in tail],
            printed=printed_defect_at(X, job.scheme.point),
        )
        output = computation.to_json()
        output["defect"] = defect.to_json()
        output.update(engine.annotate(computation.series, job))
        return EngineResult.ok(
            stage=self.stage,
            output=output,
            summary=f"Авто-ряд до t^{job.order} ({job.normalization})",
        )
