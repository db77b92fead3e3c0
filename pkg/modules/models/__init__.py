"""
Типы данных LinClonoid

Все модели экспортируются отсюда для удобства импорта:
    from modules.models import FieldSpec, FiniteFunction, ClonoidSlice, etc.
"""

from modules.models.field import FieldSpec, ProductRingSpec
from modules.models.function import FiniteFunction
from modules.models.subspace import SubspaceBasis, rref
from modules.models.clonoid import (
    AbsorbingComponent, ClonoidSlice, LineProduct, LineWitness, UnaryVerdict,
)
from modules.models.lattice import (
    ActionMatrix, GaussianBinomial, ProductLattice, Submodule, SubmoduleLattice,
)

__all__ = [
    'FieldSpec', 'ProductRingSpec',
    'FiniteFunction',
    'SubspaceBasis', 'rref',
    'AbsorbingComponent', 'ClonoidSlice', 'LineProduct', 'LineWitness', 'UnaryVerdict',
    'ActionMatrix', 'GaussianBinomial', 'ProductLattice', 'Submodule', 'SubmoduleLattice',
]
