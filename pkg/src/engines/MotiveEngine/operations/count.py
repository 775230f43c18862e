# src/engines/MotiveEngine/operations/count.py
"""
Операция `count`.

С --prime: точное число F_p-точек схемы. Без простого (схема над Q):
класс схемы интерполяцией по подсчётам на допустимых простых с проверкой
на контрольном простом; граница степени — размерность схемы, если не задана.
"""

from src.engines.operations_base import BaseOperation, OperationKind
from src.model.engine_result import EngineResult
from src.services.algebra_service.ideal import dimension
from src.services.motive_service.counting import count_points
from src.services.motive_service.interpolation import interpolate_class


class Operation(BaseOperation):
    kind = OperationKind.DIRECT
    stage = "counting"
    description = "Число F_p-точек аффинной схемы (--prime) или её класс в Z[L] интерполяцией."
    params_schema = {
        "scheme": {"type": "SchemeSpec", "required": True},
        "prime": {"type": "int", "required": False},
        "strategy": {"type": "ClassStrategy", "required": False},
    }
    outputs_schema = {"prime": "int", "count": "int", "class": "str", "dimension": "int"}

    def run(self, params, context, engine):
        job = self.job(params)
        X = job.scheme.build()
        field = X.ring.field
        budgets = job.budgets

        if job.prime is not None or field.is_prime_field:
            p = job.prime if job.prime is not None else field.characteristic
            count = count_points(X.ideal, p, budget=budgets.points, workers=budgets.workers,
                                 cache_dsn=engine.cache_dsn)
            return EngineResult.ok(
                stage=self.stage,
                output={"prime": p, "count": count, "variables": list(X.variables)},
                summary=f"|X(F_{p})| = {count}",
            )

        strategy = job.strategy
        dim = dimension(X.ideal, budgets.groebner)
        degree = dim if strategy.degree_bound is None else strategy.degree_bound
        excluded = set(strategy.excluded_primes) | set(X.bad_characteristics)
        klass = interpolate_class(
            X.ideal, degree, excluded,
            budget=budgets.points, start_prime=strategy.start_prime,
            workers=budgets.workers, cache_dsn=engine.cache_dsn,
        )
        return EngineResult.ok(
            stage=self.stage,
            output={"class": str(klass), "dimension": dim, "excluded_primes": sorted(excluded)},
            summary=f"[X] = {klass}",
        )
