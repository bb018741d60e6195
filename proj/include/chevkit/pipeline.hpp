#ifndef CHEVKIT_PIPELINE_HPP
#define CHEVKIT_PIPELINE_HPP

// One (algebra, characteristic) cell of the results table, end to end.

#include <chevkit/cartan_decomp.hpp>
#include <chevkit/chevalley.hpp>
#include <chevkit/derivations.hpp>
#include <chevkit/genbasis.hpp>
#include <chevkit/liecore.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chevkit {

enum class Pipeline { Chevalley, Generators };

inline std::string_view pipeline_name(Pipeline p) { return p == Pipeline::Chevalley ? "chevalley" : "generators"; }

inline Pipeline parse_pipeline(std::string_view s)
{
  if (s == "chevalley") return Pipeline::Chevalley;
  if (s == "generators") return Pipeline::Generators;
  throw std::invalid_argument("unknown pipeline '" + std::string(s) + "'");
}

/// Characteristics below the Killing-form bound for each type.
inline std::vector<std::uint32_t> relevant_primes(Kind kind)
{
  if (kind == Kind::E8) return {2, 3, 5};
  return {2, 3};
}

/// full up to dimension 52, both up to 133, vspace beyond.
inline Method auto_method(std::size_t dim)
{
  if (dim <= 52) return Method::Full;
  if (dim <= 133) return Method::Both;
  return Method::VSpace;
}

struct CellConfig
{
  Kind kind = Kind::G2;
  std::uint32_t p = 2;
  std::optional<Method> method;  // nullopt: auto
  Pipeline pipeline = Pipeline::Chevalley;
  FullSystemOptions full;
  std::optional<std::filesystem::path> generator_file;
};

/// Algebra built by the generator pipeline.
inline LieAlgebraFp generator_algebra(Kind kind, std::uint32_t p, const std::optional<std::filesystem::path>& file = {})
{
  const auto path = file ? *file : generator_file(kind);
  LieAlgebraFp L = abstract_from_matrix_basis(basis_builder(load_generators(path, p)));
  L.kind = kind;
  return L;
}

inline DerivationReport compute_report(const CellConfig& cfg)
{
  const RootSystemType type = root_system_type(cfg.kind);
  const Method method = cfg.method.value_or(auto_method(static_cast<std::size_t>(type.expected_dim)));
  const bool want_full = method != Method::VSpace;
  const bool want_v = method != Method::Full;

  LieAlgebraFp L = cfg.pipeline == Pipeline::Chevalley ? chevalley_algebra(cfg.kind, cfg.p)
                                                       : generator_algebra(cfg.kind, cfg.p, cfg.generator_file);
  if (want_v && !L.cartan_indices)
    throw std::invalid_argument("the V-space method needs a basis adapted to the Cartan part (use --pipeline chevalley)");

  const Subspace Z = center(L);
  DerivationInputs in;
  in.algebra = cfg.kind;
  in.p = cfg.p;
  in.dim_L = L.n;
  in.dim_Z = Z.dim();
  in.dim_H = static_cast<std::size_t>(type.rank);
  if (want_v) in.dim_V = derivations_V(L, decompose(L), Z);
  if (want_full) in.dim_Der_full = derivations_full(L, cfg.full);
  DerivationReport report = der_dimension(in);

  if (rank(killing_matrix(L)) == L.n && !report.inner)
    throw CrossCheckError(std::string(kind_name(cfg.kind)) + " p=" + std::to_string(cfg.p) +
                          ": nondegenerate Killing form but a non-inner derivation was found");
  return report;
}

}  // namespace chevkit

#endif  // CHEVKIT_PIPELINE_HPP
