"""Exact computations with Jucys-Murphy idempotents in QQ S_n and F_p S_n."""
__version__ = "0.1.0"
