// Copyright 2026 The liectl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liectl/complex_matrix.hpp"
#include "liectl/lie_engine.hpp"

namespace liectl {

// Dimensions of the tensor factors of a composite Hilbert space.
struct TensorFactorization {
    std::vector<std::size_t> dims;  // each >= 2

    std::size_t total() const;
};

// u1 (x) 1 + 1 (x) u2, skew-Hermitian of dimension dim(u1)*dim(u2).
// exp of it is exp(u1) (x) exp(u2): the two summands commute.
ComplexMatrix kron_sum_embed(const ComplexMatrix& u1, const ComplexMatrix& u2);

// Orthonormal basis of u(m) (x) 1 + 1 (x) u(n) inside u(mn); dimension
// m^2 + n^2 - 1 (the shared identity direction is counted once).
AlgebraBasis product_subalgebra(std::size_t m, std::size_t n);

struct ExtensionResult {
    ComplexMatrix element;           // the added generator, outside the product subalgebra
    bool verified = false;           // closure reached (mn)^2
    bool verification_skipped = false;  // "unverified (size)": mn above the desk-scale cap
    std::size_t closure_dim = 0;     // 0 when verification skipped
};

// One extra element that upgrades the product subalgebra to all of u(mn).
// The default candidate is i*(h (x) h') built from the first traceless
// basis element of each factor, which lies in the orthogonal complement of
// the product subalgebra. A supplied candidate must be skew-Hermitian of
// dimension mn and outside the product subalgebra (precondition_error
// otherwise). Verification runs the closure and checks dim == (mn)^2;
// it is skipped for mn > verify_cap (default 8).
ExtensionResult minimal_extension(std::size_t m, std::size_t n,
                                  const std::optional<ComplexMatrix>& candidate = std::nullopt,
                                  std::size_t verify_cap = 8);

// Binary join tree over tensor factors.
struct JoinTree {
    // leaf: factor_dim set, children empty; join: two children
    std::size_t factor_dim = 0;
    std::vector<JoinTree> children;

    bool is_leaf() const { return children.empty(); }
    std::size_t total_dim() const;
    std::string to_string() const;
};

struct ChainPlan {
    std::size_t extension_count = 0;  // always r - 1 for r factors
    JoinTree tree;
};

// Balanced binary pairing of the factors; joining r factors costs r - 1
// extension elements, one per binary join.
ChainPlan chain_plan(const TensorFactorization& f);

// (mn)^2, the dimension the minimal extension must reach.
std::size_t dim_check_tensor(std::size_t m, std::size_t n);

}  // namespace liectl
