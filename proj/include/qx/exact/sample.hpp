#pragma once

#include <random>

#include "qx/exact/category.hpp"

namespace qx::exact {

using Rng = std::mt19937_64;

Obj random_obj(const Category& cat, Rng& rng);
/// Uniform over Hom(src, dst) in the reduced matrix form.
Mor random_mor(const Obj& src, const Obj& dst, Rng& rng);
/// A mono out of src into some in-universe object; src itself must be in the universe.
Mor random_mono_from(const Category& cat, const Obj& src, Rng& rng);
/// A random mono between random in-universe objects.
Mor random_mono(const Category& cat, Rng& rng);
Mor random_epi(const Category& cat, Rng& rng);
Mor random_automorphism(const Obj& x, Rng& rng);

}  // namespace qx::exact
