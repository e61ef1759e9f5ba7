"""Exact smoothness tests and second Hochschild cohomology for finite-dimensional
commutative Hopf algebras over F_p and Q.

Modules:

* :mod:`~hopfsmooth.exactla` -- exact linear algebra over F_p and Q
* :mod:`~hopfsmooth.algebra` -- structure-constant algebras and monomial presentations
* :mod:`~hopfsmooth.hopf` -- Hopf tables, constructors, axiom checks, subgroup embeddings
* :mod:`~hopfsmooth.cohomology` -- symmetric/full H^2, Ker mu, smoothness verdicts, restriction
* :mod:`~hopfsmooth.cleft` -- cleft extensions over the dual numbers and their cocycles
* :mod:`~hopfsmooth.decompose` -- truncated-polynomial decomposition of local Hopf algebras
* :mod:`~hopfsmooth.corpus` -- the regression corpus and suite runner
* :mod:`~hopfsmooth.cli` -- the ``hopfsmooth`` command
"""

__version__ = "0.1.0"

from .exactla import Field  # noqa: E402
from .hopf import (  # noqa: E402
    GroupData,
    HopfTable,
    SubgroupData,
    etale_functions_hopf,
    group_hopf,
    sample1_hopf,
    tensor_hopf,
    trivial_hopf,
    truncated_primitive_hopf,
    verify_hopf_axioms,
)
from .cohomology import (  # noqa: E402
    build_mu_data,
    full_second_cohomology,
    restriction_map,
    second_cohomology,
    smoothness_report,
    sym_second_cohomology,
)
from .presets import parse_preset  # noqa: E402

__all__ = [
    "__version__",
    "Field",
    "GroupData",
    "HopfTable",
    "SubgroupData",
    "etale_functions_hopf",
    "group_hopf",
    "sample1_hopf",
    "tensor_hopf",
    "trivial_hopf",
    "truncated_primitive_hopf",
    "verify_hopf_axioms",
    "build_mu_data",
    "full_second_cohomology",
    "restriction_map",
    "second_cohomology",
    "smoothness_report",
    "sym_second_cohomology",
    "parse_preset",
]
