"""Exact arithmetic for cyclic quasi-symmetric functions."""
from .combinatorics import CyclicClass, NSubset, cyclic_class
from .cqsym import CQSymElem, fcyc_as_qsym, from_qsym, mcyc_as_qsym
from .errors import CapExceeded, CQSymError, IdentityFailure, NotCyclic
from .qsym import QSymElem

__all__ = [
    "CyclicClass", "NSubset", "cyclic_class", "CQSymElem", "fcyc_as_qsym", "from_qsym",
    "mcyc_as_qsym", "QSymElem", "CQSymError", "CapExceeded", "IdentityFailure", "NotCyclic",
]
