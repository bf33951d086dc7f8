#pragma once

#include <optional>
#include <string>
#include <vector>

namespace holodual {

/// Stable identifiers for the mathematical statements a check instantiates.
/// Every report record carries one.
namespace anchor {
inline constexpr const char* duality_locally_finite = "duality.locally-finite-to-profinite";
inline constexpr const char* duality_profinite = "duality.profinite-to-locally-finite";
inline constexpr const char* reflexivity_abelian = "reflexivity.abelian-evaluation";
inline constexpr const char* holomorphic_locally_constant = "holomorphic.locally-constant";
inline constexpr const char* character_decomposition = "fourier.character-decomposition";
inline constexpr const char* function_tensor_iso = "functions.product-tensor-iso";
inline constexpr const char* hopf_axioms = "hopf.axioms";
inline constexpr const char* hopf_duality = "hopf.duality.evaluation-pairing";
inline constexpr const char* hopf_reflexivity_locally_finite = "hopf.reflexivity.locally-finite";
inline constexpr const char* hopf_reflexivity_profinite = "hopf.reflexivity.profinite";
inline constexpr const char* envelope_identity = "envelope.identity-on-towers";
inline constexpr const char* spectrum_recovery = "spectrum.dual-group-recovery";
inline constexpr const char* structure_invariant = "structure.invariant";
} // namespace anchor

struct CheckRecord {
    std::string check;
    std::optional<int> level; // 1-based tower level when applicable
    bool pass = false;
    std::string witness; // counterexample description, empty on pass
    std::string anchor;
};

struct DiagramNode {
    std::string name;
    std::string description;
};

struct DiagramEdge {
    std::string from;
    std::string to;
    std::string label;
    bool verified = false;
    std::string certificate;
};

/// The four-corner reflexivity diagram emitted by the Hopf tower checks.
struct Diagram {
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;
};

struct Report {
    std::string subject;
    std::vector<CheckRecord> records;
    std::optional<Diagram> diagram;

    bool passed() const;
    int fail_count() const;

    CheckRecord& add(const std::string& check, bool pass, const std::string& anchor,
                     std::optional<int> level = std::nullopt, const std::string& witness = "");
    void merge(const Report& other, std::optional<int> level = std::nullopt,
               const std::string& prefix = "");
};

} // namespace holodual
