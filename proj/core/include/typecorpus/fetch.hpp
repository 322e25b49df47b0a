// Copyright 2026 The typecorpus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TYPECORPUS_FETCH_HPP_
#define TYPECORPUS_FETCH_HPP_

#include <filesystem>

#include "typecorpus/manifest.hpp"

namespace typecorpus {

// Clones entry.url below dest_root/author/repo and checks out the pinned
// commit via the git command-line client. A tree that is already at the
// pinned commit is left untouched, so re-fetching is a no-op.
// Throws FetchError (FetchFailed when the clone fails, CommitNotFound when
// the pinned hash cannot be checked out).
std::filesystem::path fetch_project(const ManifestEntry& entry,
                                    const std::filesystem::path& dest_root);

}  // namespace typecorpus

#endif  // TYPECORPUS_FETCH_HPP_
