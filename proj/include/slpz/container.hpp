#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "slpz/encoded_dictionary.hpp"

namespace slpz {

inline constexpr char kContainerMagic[8] = {'S', 'L', 'P', 'S', 'U', 'C', 'C', '1'};
inline constexpr std::uint64_t kContainerVersion = 1;

/*
    On-disk layout (see docs/FORMAT.md):

      magic "SLPSUCC1"
      varint version, sigma, n, m, rho, start
      sigma bytes of terminal map
      varint byte length of each component: left_bits, big_b, d_rho, d_pi, dirs
      the five components, back to back

    A bit string is a varint bit length followed by the bits packed LSB
    first into whole bytes, zero padded. A wavelet tree is varint alphabet
    size, varint length, then its level bits as one bit string.
*/
struct ContainerHeader {
  std::uint64_t version = kContainerVersion;
  std::uint64_t sigma = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t rho = 0;
  std::uint64_t start = 0;
  std::vector<std::uint8_t> terminals;
  /// Byte lengths of left_bits, big_b, d_rho, d_pi, dirs.
  std::vector<std::uint64_t> component_bytes;
  /// Offset of the first payload byte.
  std::size_t header_bytes = 0;
};

std::vector<std::uint8_t> serialize(const EncodedDictionary& dict);
void serialize(const EncodedDictionary& dict, std::ostream& out);

/// Throws TruncatedError, BadMagicError, VersionError, LengthMismatchError or CorruptError.
EncodedDictionary deserialize(std::span<const std::uint8_t> bytes);

ContainerHeader read_header(std::span<const std::uint8_t> bytes);

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v);

}  // namespace slpz
