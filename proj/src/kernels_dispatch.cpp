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

#include "liectl/kernels.hpp"

#include <cstdlib>

namespace liectl::kernels {

namespace {

const KernelTable* select_initial() {
    if (const char* env = std::getenv("LIECTL_KERNELS")) {
        const std::string want(env);
        if (want == "scalar") return &scalar_table;
        if (want == "avx2") {
            if (const KernelTable* t = avx2_table_or_null()) return t;
            return &scalar_table;
        }
    }
    if (const KernelTable* t = avx2_table_or_null()) return t;
    return &scalar_table;
}

const KernelTable*& current() {
    static const KernelTable* table = select_initial();
    return table;
}

}  // namespace

const KernelTable& active() { return *current(); }

bool force_lane(const std::string& name) {
    if (name == "scalar") {
        current() = &scalar_table;
        return true;
    }
    if (name == "avx2") {
        if (const KernelTable* t = avx2_table_or_null()) {
            current() = t;
            return true;
        }
        return false;
    }
    return false;
}

}  // namespace liectl::kernels
