"""Graphs whose adjacency spectrum has at most two eigenvalues outside {-2, 0}:
construction, exact classification, cospectrality and spectral determination."""

from .classifier import (ClassificationReport, almost_equal_columns, forbidden_scan, in_h,
                         max_coclique, membership, positive_eigenvalue_count, psd_rank2_check)
from .cospectral import (cospectral_mates, is_ds, nonzero_key, nonzero_spectrum_class,
                         theorem6_class)
from .exact import CharPoly, SpectrumShape, char_poly, inertia, rank, spectrum_shape
from .families import (FamilyInstance, SymbolicSpectrum, catalog_instances, construct, recognize,
                       symbolic_spectrum)
from .graph import (CanonicalForm, Graph, canonical_form, complement, components, disjoint_union,
                    from_graph6, induced_subgraph, is_connected, isomorphic, to_graph6)
from .harness import enumerate_nonisomorphic, ingest_graph6, verify_classification
from .numeric import eigenvalues, interlacing_holds

__version__ = "0.1.0"
