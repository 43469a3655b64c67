#ifndef LINETREES_DB_CODEC_HPP
#define LINETREES_DB_CODEC_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linetrees/digraph.hpp"

namespace linetrees {

class CodecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cyclic binary string of length 2^degree in which every binary word of
/// length `degree` occurs exactly once as a cyclic window.
struct DeBruijnSequence {
  std::string bits;
  unsigned degree = 0;

  friend bool operator==(const DeBruijnSequence&, const DeBruijnSequence&) = default;
};

/// Hamiltonian path in DB_n(2), as vertex ids (vertex id = the window read
/// as a binary number).
struct HamPath {
  std::vector<VertexId> vertices;
  unsigned degree = 0;

  friend bool operator==(const HamPath&, const HamPath&) = default;
};

/// True iff all 2^n cyclic n-windows of `bits` are distinct. Throws
/// CodecError when the length is not 2^n or a character is not 0/1.
bool is_de_bruijn(std::string_view bits, unsigned n);

/// Checked construction.
DeBruijnSequence make_sequence(std::string_view bits, unsigned n);

HamPath seq_to_path(const DeBruijnSequence& b);
DeBruijnSequence path_to_seq(const HamPath& p);

/// Binary string of length 2^(n-1) for a degree-n sequence, n >= 2.
std::string encode(const DeBruijnSequence& b);
/// Inverse of encode. |bits| must be 2^(n-1), n >= 2.
DeBruijnSequence decode(std::string_view bits, unsigned n);

/// All de Bruijn sequences of degree n <= 4, in lexicographic order, found by
/// filtering every binary string of length 2^n.
std::vector<DeBruijnSequence> enumerate_db_sequences(unsigned n);

}  // namespace linetrees

#endif  // LINETREES_DB_CODEC_HPP
