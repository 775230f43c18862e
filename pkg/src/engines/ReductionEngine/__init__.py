from .core import ReductionEngine
__all__ = ["ReductionEngine"]
