"""Combinatorics of discrete derived categories: objects, arcs, cones and thick subcategories."""

from .objects import (Arc, CategoryParams, IndecObject, MarkedPoint, arc_of, make_object,
                      object_of, parse_object, shift)
from .homs import classify, hom_dim, hom_dim_orbit, orbit_statements, satisfied_statements
from .cones import appendix_triangle, cone_of, path_relation
from .geometry import concatenate, cut_less, factoring_arcs, intersection_number, lift
from .collections import (Collection, arcify, generator_split, is_arc_collection, is_reduced,
                          membership, reduce)
from .groupoid_homology import (descriptor_leq, generated_subgroupoid, homology_class,
                                k0_basis_check)
from .mutation import (connected_components, inverse, leq_mut, mutable_moves, mutate,
                       mutate_to_exceptional, mutation_equivalent)
from .lattice import (EnumerationBounds, build_lattice, enumerate_configurations, hasse,
                      rotation_quotient, thick_classes)
