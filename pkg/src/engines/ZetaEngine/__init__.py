from .core import ZetaEngine
__all__ = ["ZetaEngine"]
