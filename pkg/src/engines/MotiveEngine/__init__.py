from .core import MotiveEngine
__all__ = ["MotiveEngine"]
