from .core import VerifyEngine
__all__ = ["VerifyEngine"]
