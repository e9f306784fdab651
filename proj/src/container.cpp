#include "slpz/container.hpp"

#include <algorithm>
#include <cstring>
#include <ostream>
#include <stdexcept>

#include "slpz/errors.hpp"

namespace slpz {

namespace {

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::span<const std::uint8_t> take(std::size_t k) {
    if (k > remaining()) throw TruncatedError("container: unexpected end of data");
    auto s = bytes_.subspan(pos_, k);
    pos_ += k;
    return s;
  }

  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0;; shift += 7) {
      if (shift > 63) throw CorruptError("container: varint too long");
      const std::uint8_t byte = take(1)[0];
      v |= std::uint64_t{byte & 0x7fu} << shift;
      if (!(byte & 0x80u)) return v;
    }
  }

  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  std::size_t pos() const noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void put_bits(std::vector<std::uint8_t>& out, const BitVector& bits) {
  put_varint(out, bits.size());
  const std::size_t n_bytes = (bits.size() + 7) / 8;
  const auto words = bits.words();
  for (std::size_t k = 0; k < n_bytes; ++k) out.push_back(static_cast<std::uint8_t>(words[k / 8] >> (8 * (k % 8))));
}

void put_bits(std::vector<std::uint8_t>& out, const std::vector<bool>& bits) {
  AppendableBitVector bv;
  for (bool b : bits) bv.push_back(b);
  put_bits(out, BitVector(std::move(bv)));
}

void put_wavelet(std::vector<std::uint8_t>& out, const WaveletTree& wt) {
  put_varint(out, wt.alphabet_size());
  put_varint(out, wt.size());
  put_bits(out, wt.concatenated_levels());
}

// The whole of r must be one bit string.
BitVector get_bits(Reader& r) {
  const std::uint64_t len = r.varint();
  if (len / 8 + (len % 8 != 0) != r.remaining())
    throw LengthMismatchError("container: bit string length disagrees with component size");
  const auto bytes = r.take(r.remaining());
  std::vector<std::uint64_t> words((bytes.size() + 7) / 8, 0);
  for (std::size_t k = 0; k < bytes.size(); ++k) words[k / 8] |= std::uint64_t{bytes[k]} << (8 * (k % 8));
  if (len % 8 != 0 && (bytes.back() >> (len % 8)) != 0) throw CorruptError("container: nonzero padding bits");
  return BitVector::from_words(std::move(words), len);
}

WaveletTree get_wavelet(Reader& r, std::uint64_t m, std::uint64_t rho) {
  const std::uint64_t sigma = r.varint();
  const std::uint64_t length = r.varint();
  if (sigma != std::max<std::uint64_t>(rho, 1) || length != m)
    throw CorruptError("container: wavelet tree shape disagrees with header");
  const BitVector levels = get_bits(r);
  if (levels.size() != length * WaveletTree::height_for(sigma))
    throw CorruptError("container: wavelet tree level bits have the wrong length");
  return WaveletTree::from_levels(sigma, length, levels);
}

void encode_components(const EncodedDictionary& dict, std::vector<std::uint64_t>& sizes,
                       std::vector<std::uint8_t>& payload) {
  const auto& rights = dict.rights();
  std::vector<std::uint8_t> part;
  auto flush = [&] {
    sizes.push_back(part.size());
    payload.insert(payload.end(), part.begin(), part.end());
    part.clear();
  };
  put_bits(part, dict.left_bits());
  flush();
  put_bits(part, rights.values());
  flush();
  put_wavelet(part, rights.assignment());
  flush();
  put_wavelet(part, rights.permuted());
  flush();
  put_bits(part, rights.decreasing());
  flush();
}

}  // namespace

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

std::vector<std::uint8_t> serialize(const EncodedDictionary& dict) {
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint8_t> payload;
  encode_components(dict, sizes, payload);

  std::vector<std::uint8_t> out(std::begin(kContainerMagic), std::end(kContainerMagic));
  put_varint(out, kContainerVersion);
  put_varint(out, dict.sigma());
  put_varint(out, dict.num_symbols());
  put_varint(out, dict.num_rules());
  put_varint(out, dict.rho());
  put_varint(out, dict.start());
  out.insert(out.end(), dict.terminals().begin(), dict.terminals().end());
  for (std::uint64_t s : sizes) put_varint(out, s);
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

void serialize(const EncodedDictionary& dict, std::ostream& out) {
  const auto bytes = serialize(dict);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::ios_base::failure("container: write failed");
}

ContainerHeader read_header(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  if (bytes.size() < sizeof(kContainerMagic)) {
    if (!std::equal(bytes.begin(), bytes.end(), kContainerMagic)) throw BadMagicError("container: bad magic");
    throw TruncatedError("container: shorter than the magic number");
  }
  if (std::memcmp(r.take(sizeof(kContainerMagic)).data(), kContainerMagic, sizeof(kContainerMagic)) != 0)
    throw BadMagicError("container: bad magic");

  ContainerHeader h;
  h.version = r.varint();
  if (h.version != kContainerVersion)
    throw VersionError("container: unsupported version " + std::to_string(h.version));
  h.sigma = r.varint();
  h.n = r.varint();
  h.m = r.varint();
  h.rho = r.varint();
  h.start = r.varint();
  if (h.sigma == 0 || h.sigma > 256) throw CorruptError("container: alphabet size out of range");
  if (h.n != h.sigma + h.m || h.n >= (std::uint64_t{1} << 32)) throw CorruptError("container: n != sigma + m");
  if (h.start == 0 || h.start > h.n) throw CorruptError("container: start symbol out of range");
  const auto t = r.take(h.sigma);
  h.terminals.assign(t.begin(), t.end());

  std::uint64_t total = 0;
  for (int k = 0; k < 5; ++k) {
    h.component_bytes.push_back(r.varint());
    if (h.component_bytes.back() > bytes.size()) throw TruncatedError("container: component longer than data");
    total += h.component_bytes.back();
  }
  h.header_bytes = r.pos();
  if (total > r.remaining()) throw TruncatedError("container: payload shorter than declared");
  if (total < r.remaining()) throw LengthMismatchError("container: trailing bytes after payload");
  return h;
}

EncodedDictionary deserialize(std::span<const std::uint8_t> bytes) {
  const ContainerHeader h = read_header(bytes);
  std::size_t offset = h.header_bytes;
  auto component = [&](int k) {
    Reader r(bytes.subspan(offset, h.component_bytes[k]));
    offset += h.component_bytes[k];
    return r;
  };

  try {
    Reader left = component(0);
    BitVector left_bits = get_bits(left);
    Reader big_b = component(1);
    BitVector values = get_bits(big_b);
    Reader d_rho = component(2);
    WaveletTree assignment = get_wavelet(d_rho, h.m, h.rho);
    Reader d_pi = component(3);
    WaveletTree permuted = get_wavelet(d_pi, h.m, h.rho);
    Reader dirs_reader = component(4);
    const BitVector dirs = get_bits(dirs_reader);
    if (dirs.size() != h.rho) throw CorruptError("container: direction bits disagree with rho");
    std::vector<bool> decreasing(h.rho);
    for (std::size_t k = 0; k < h.rho; ++k) decreasing[k] = dirs.get(k);

    MonotoneSequenceCode rights(std::move(assignment), std::move(permuted), std::move(values), std::move(decreasing));
    return EncodedDictionary(h.terminals, static_cast<SymbolId>(h.start), std::move(left_bits), std::move(rights));
  } catch (const TruncatedError& e) {
    // A component ran out inside its declared size: the declared size is wrong.
    throw LengthMismatchError(e.what());
  } catch (const std::invalid_argument& e) {
    throw CorruptError(std::string("container: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw CorruptError(std::string("container: ") + e.what());
  }
}

}  // namespace slpz
