from .core import ArcEngine
__all__ = ["ArcEngine"]
