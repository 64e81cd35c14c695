#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "mtrs/error.hpp"
#include "mtrs/field.hpp"

namespace mtrs {

namespace {

struct ModulusEntry {
  std::uint32_t p;
  std::uint32_t m;
  std::initializer_list<std::uint32_t> coeffs;
};

// Conway polynomials for every prime power q <= 1024, constant term first.
// For prime q the entry is x - g with g the least primitive root.
const ModulusEntry kModuli[] = {
    {2, 1, {1, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {3, 1, {1, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1}},
    {5, 1, {3, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {5, 4, {2, 4, 4, 0, 1}},
    {7, 1, {4, 1}},
    {7, 2, {3, 6, 1}},
    {7, 3, {4, 0, 6, 1}},
    {11, 1, {9, 1}},
    {11, 2, {2, 7, 1}},
    {13, 1, {11, 1}},
    {13, 2, {2, 12, 1}},
    {17, 1, {14, 1}},
    {17, 2, {3, 16, 1}},
    {19, 1, {17, 1}},
    {19, 2, {2, 18, 1}},
    {23, 1, {18, 1}},
    {23, 2, {5, 21, 1}},
    {29, 1, {27, 1}},
    {29, 2, {2, 24, 1}},
    {31, 1, {28, 1}},
    {31, 2, {3, 29, 1}},
    {37, 1, {35, 1}},
    {41, 1, {35, 1}},
    {43, 1, {40, 1}},
    {47, 1, {42, 1}},
    {53, 1, {51, 1}},
    {59, 1, {57, 1}},
    {61, 1, {59, 1}},
    {67, 1, {65, 1}},
    {71, 1, {64, 1}},
    {73, 1, {68, 1}},
    {79, 1, {76, 1}},
    {83, 1, {81, 1}},
    {89, 1, {86, 1}},
    {97, 1, {92, 1}},
    {101, 1, {99, 1}},
    {103, 1, {98, 1}},
    {107, 1, {105, 1}},
    {109, 1, {103, 1}},
    {113, 1, {110, 1}},
    {127, 1, {124, 1}},
    {131, 1, {129, 1}},
    {137, 1, {134, 1}},
    {139, 1, {137, 1}},
    {149, 1, {147, 1}},
    {151, 1, {145, 1}},
    {157, 1, {152, 1}},
    {163, 1, {161, 1}},
    {167, 1, {162, 1}},
    {173, 1, {171, 1}},
    {179, 1, {177, 1}},
    {181, 1, {179, 1}},
    {191, 1, {172, 1}},
    {193, 1, {188, 1}},
    {197, 1, {195, 1}},
    {199, 1, {196, 1}},
    {211, 1, {209, 1}},
    {223, 1, {220, 1}},
    {227, 1, {225, 1}},
    {229, 1, {223, 1}},
    {233, 1, {230, 1}},
    {239, 1, {232, 1}},
    {241, 1, {234, 1}},
    {251, 1, {245, 1}},
    {257, 1, {254, 1}},
    {263, 1, {258, 1}},
    {269, 1, {267, 1}},
    {271, 1, {265, 1}},
    {277, 1, {272, 1}},
    {281, 1, {278, 1}},
    {283, 1, {280, 1}},
    {293, 1, {291, 1}},
    {307, 1, {302, 1}},
    {311, 1, {294, 1}},
    {313, 1, {303, 1}},
    {317, 1, {315, 1}},
    {331, 1, {328, 1}},
    {337, 1, {327, 1}},
    {347, 1, {345, 1}},
    {349, 1, {347, 1}},
    {353, 1, {350, 1}},
    {359, 1, {352, 1}},
    {367, 1, {361, 1}},
    {373, 1, {371, 1}},
    {379, 1, {377, 1}},
    {383, 1, {378, 1}},
    {389, 1, {387, 1}},
    {397, 1, {392, 1}},
    {401, 1, {398, 1}},
    {409, 1, {388, 1}},
    {419, 1, {417, 1}},
    {421, 1, {419, 1}},
    {431, 1, {424, 1}},
    {433, 1, {428, 1}},
    {439, 1, {424, 1}},
    {443, 1, {441, 1}},
    {449, 1, {446, 1}},
    {457, 1, {444, 1}},
    {461, 1, {459, 1}},
    {463, 1, {460, 1}},
    {467, 1, {465, 1}},
    {479, 1, {466, 1}},
    {487, 1, {484, 1}},
    {491, 1, {489, 1}},
    {499, 1, {492, 1}},
    {503, 1, {498, 1}},
    {509, 1, {507, 1}},
    {521, 1, {518, 1}},
    {523, 1, {521, 1}},
    {541, 1, {539, 1}},
    {547, 1, {545, 1}},
    {557, 1, {555, 1}},
    {563, 1, {561, 1}},
    {569, 1, {566, 1}},
    {571, 1, {568, 1}},
    {577, 1, {572, 1}},
    {587, 1, {585, 1}},
    {593, 1, {590, 1}},
    {599, 1, {592, 1}},
    {601, 1, {594, 1}},
    {607, 1, {604, 1}},
    {613, 1, {611, 1}},
    {617, 1, {614, 1}},
    {619, 1, {617, 1}},
    {631, 1, {628, 1}},
    {641, 1, {638, 1}},
    {643, 1, {632, 1}},
    {647, 1, {642, 1}},
    {653, 1, {651, 1}},
    {659, 1, {657, 1}},
    {661, 1, {659, 1}},
    {673, 1, {668, 1}},
    {677, 1, {675, 1}},
    {683, 1, {678, 1}},
    {691, 1, {688, 1}},
    {701, 1, {699, 1}},
    {709, 1, {707, 1}},
    {719, 1, {708, 1}},
    {727, 1, {722, 1}},
    {733, 1, {727, 1}},
    {739, 1, {736, 1}},
    {743, 1, {738, 1}},
    {751, 1, {748, 1}},
    {757, 1, {755, 1}},
    {761, 1, {755, 1}},
    {769, 1, {758, 1}},
    {773, 1, {771, 1}},
    {787, 1, {785, 1}},
    {797, 1, {795, 1}},
    {809, 1, {806, 1}},
    {811, 1, {808, 1}},
    {821, 1, {819, 1}},
    {823, 1, {820, 1}},
    {827, 1, {825, 1}},
    {829, 1, {827, 1}},
    {839, 1, {828, 1}},
    {853, 1, {851, 1}},
    {857, 1, {854, 1}},
    {859, 1, {857, 1}},
    {863, 1, {858, 1}},
    {877, 1, {875, 1}},
    {881, 1, {878, 1}},
    {883, 1, {881, 1}},
    {887, 1, {882, 1}},
    {907, 1, {905, 1}},
    {911, 1, {894, 1}},
    {919, 1, {912, 1}},
    {929, 1, {926, 1}},
    {937, 1, {932, 1}},
    {941, 1, {939, 1}},
    {947, 1, {945, 1}},
    {953, 1, {950, 1}},
    {967, 1, {962, 1}},
    {971, 1, {965, 1}},
    {977, 1, {974, 1}},
    {983, 1, {978, 1}},
    {991, 1, {985, 1}},
    {997, 1, {990, 1}},
    {1009, 1, {998, 1}},
    {1013, 1, {1010, 1}},
    {1019, 1, {1017, 1}},
    {1021, 1, {1011, 1}},
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::default_for(std::uint64_t q) {
  if (q < 2 || q > 65536) throw Error(ErrorKind::invalid_argument, "field order out of range: " + std::to_string(q));
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1 || !is_prime(p)) throw Error(ErrorKind::invalid_argument, "not a prime power: " + std::to_string(q));

  for (const auto& e : kModuli) {
    if (e.p == p && e.m == m) return FieldSpec{p, m, std::vector<std::uint32_t>(e.coeffs)};
  }

  // Smallest primitive polynomial, enumerating (c0, ..., c_{m-1}) with c0
  // most significant. A polynomial whose root has order q-1 is irreducible.
  std::vector<std::uint32_t> tail(m, 0);
  for (;;) {
    if (tail[0] != 0) {
      FieldSpec spec{p, m, tail};
      spec.modulus.push_back(1);
      if (is_irreducible(p, spec.modulus)) {
        Field f(spec);
        if (f.primitive() == f.root()) return spec;
      }
    }
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++tail[i] < p) break;
      tail[i] = 0;
      if (i == 0) throw Error(ErrorKind::reducible_modulus, "no primitive polynomial found");
    }
  }
}

}  // namespace mtrs
