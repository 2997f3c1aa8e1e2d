//
// Copyright 2026 The Diacritica Authors
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
//

// Convenience header pulling in the whole library.

#ifndef DIACRITICA_DIACRITICA_HPP_
#define DIACRITICA_DIACRITICA_HPP_

#include "diacritica/corrupt.hpp"
#include "diacritica/diagnostics.hpp"
#include "diacritica/error.hpp"
#include "diacritica/evalkit.hpp"
#include "diacritica/io.hpp"
#include "diacritica/keyboard_layout.hpp"
#include "diacritica/lexicon.hpp"
#include "diacritica/parallel.hpp"
#include "diacritica/remote_backend.hpp"
#include "diacritica/restore.hpp"
#include "diacritica/structured_text.hpp"
#include "diacritica/textcore.hpp"
#include "diacritica/typo_model.hpp"
#include "diacritica/unicode.hpp"

#endif  // DIACRITICA_DIACRITICA_HPP_
