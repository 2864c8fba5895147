"""Sampled graph homomorphism densities with exact or Bloom edge oracles."""

from .backend import active_backend, set_backend
from .bench import BenchResult, bench_patterns, er_probability, run_bench, write_bench_csv
from .embedding import (EmbeddingRecord, embed_dataset, embed_graph,
                        format_density, write_embeddings_csv)
from .exact import (ExactCount, are_isomorphic, density_vector_exact,
                    exact_hom, hom_k2, hom_k3)
from .graphs import (FormatError, Graph, Pattern, PatternFamily,
                     atlas_connected, clique, dataset_record,
                     enumerate_patterns, generate_er, new_graph, new_pattern,
                     parse_dataset, parse_edge_list, pattern_from_graph,
                     pattern_to_graph, write_edge_list)
from .oracles import (BLOOM_HASH_SEED, BloomEdgeFilter, ExactEdgeSet,
                      bloom_parameters, build_bloom, build_exact, build_oracle)
from .sampling import (CHUNK_SIZE, DensityEstimate, SamplingConfig,
                       is_homomorphism, required_samples, sample_density,
                       sample_density_many, sample_morphisms)
from .seeding import derive_seed

__version__ = "0.1.0"

__all__ = [
    "BLOOM_HASH_SEED", "BenchResult", "BloomEdgeFilter", "CHUNK_SIZE",
    "DensityEstimate", "EmbeddingRecord", "ExactCount", "ExactEdgeSet",
    "FormatError", "Graph", "Pattern", "PatternFamily", "SamplingConfig",
    "active_backend", "are_isomorphic", "atlas_connected", "bench_patterns",
    "bloom_parameters", "build_bloom", "build_exact", "build_oracle",
    "clique", "dataset_record", "density_vector_exact", "derive_seed",
    "embed_dataset", "embed_graph", "enumerate_patterns", "er_probability",
    "exact_hom", "format_density", "generate_er", "hom_k2", "hom_k3",
    "is_homomorphism", "new_graph", "new_pattern", "parse_dataset",
    "parse_edge_list", "pattern_from_graph", "pattern_to_graph",
    "required_samples", "run_bench", "sample_density", "sample_density_many",
    "sample_morphisms", "set_backend", "write_bench_csv", "write_edge_list",
    "write_embeddings_csv",
]
