#ifndef LORASIM_FRAME_HPP
#define LORASIM_FRAME_HPP

#include <cstdint>

namespace lorasim {

constexpr int kDataPayloadBytes = 21;
constexpr int kAckPayloadBytes = 12;

enum class FrameKind : std::uint8_t { kData, kAck };

/// One frame as it exists on the air. Device ids are dense indices;
/// the gateway uses id -1 as its sender id on downlink.
struct Frame {
  FrameKind kind = FrameKind::kData;
  int sender = 0;
  int destination = -1;     // receiving device for an ACK, -1 for uplink
  std::uint32_t fcnt = 0;   // frame counter, repeated across retransmissions
  bool confirmed = false;   // uplink requests an ACK
  int payload_bytes = kDataPayloadBytes;
};

}  // namespace lorasim

#endif
