#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "fieldnorm/review.hpp"

namespace fieldnorm {

inline constexpr std::string_view kApiPrefix = "/api/v1";

// HTTP facade over a review session. Payloads are JSON.
//
//   GET  /api/v1/documents                              ids and review status
//   GET  /api/v1/documents/{id}                         records, candidates, decisions
//   POST /api/v1/documents/{id}/records/{n}/decision    store a decision
//   GET  /api/v1/documents/{id}/export[?force=true]     gold corpus file
//
// Errors come back as {"error": "..."} with 400, 404 or 409.
class ReviewServer {
 public:
  explicit ReviewServer(ReviewSession& session);
  ~ReviewServer();

  ReviewServer(const ReviewServer&) = delete;
  ReviewServer& operator=(const ReviewServer&) = delete;

  // Blocks until stop().
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it (negative on failure); follow
  // with listen_after_bind().
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fieldnorm
