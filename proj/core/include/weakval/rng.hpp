#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace weakval {

/// Philox-4x64-10 counter-based block cipher (Salmon et al., "Parallel random
/// numbers: as easy as 1, 2, 3"). Stateless: every 256-bit counter/key pair
/// maps to four independent 64-bit outputs, which is what makes per-photon
/// streams reproducible regardless of how work is sharded.
struct Philox4x64 {
    using Counter = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    static Counter block(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const auto [hi0, lo0] = mulhilo(kMul0, ctr[0]);
            const auto [hi1, lo1] = mulhilo(kMul1, ctr[2]);
            ctr = Counter{hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

  private:
    static std::pair<std::uint64_t, std::uint64_t> mulhilo(std::uint64_t a, std::uint64_t b) {
        const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
        return {static_cast<std::uint64_t>(p >> 64), static_cast<std::uint64_t>(p)};
    }
};

/// One photon's private random stream. The stream is keyed by
/// (seed, stream_id, photon_index), so the draw sequence a photon sees never
/// depends on which shard processed it or on how many draws its neighbours
/// consumed.
class PhotonStream {
  public:
    PhotonStream(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t photon_index)
        : key_{seed, stream_id}, photon_(photon_index) {}

    std::uint64_t next_u64() {
        if (pos_ == 4) {
            buffer_ = Philox4x64::block({photon_, block_++, 0, 0}, key_);
            pos_ = 0;
        }
        return buffer_[pos_++];
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (always consumes two draws).
    double normal() {
        const double u1 = uniform_open();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
    }

  private:
    Philox4x64::Key key_;
    std::uint64_t photon_;
    std::uint64_t block_ = 0;
    Philox4x64::Counter buffer_{};
    int pos_ = 4;
};

}  // namespace weakval
