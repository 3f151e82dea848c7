#include "fieldnorm/server.hpp"

#include "httplib.h"

namespace fieldnorm {

using nlohmann::json;

struct ReviewServer::Impl {
  explicit Impl(ReviewSession& s) : session(s) {}

  ReviewSession& session;
  httplib::Server http;
};

namespace {

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& what) {
  send_json(res, status, json{{"error", what}});
}

template <typename Handler>
httplib::Server::Handler guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const NotFound& e) {
      send_error(res, 404, e.what());
    } catch (const InvalidRequest& e) {
      send_error(res, 400, e.what());
    } catch (const Conflict& e) {
      send_error(res, 409, e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, e.what());
    }
  };
}

std::size_t parse_index(const std::string& text) {
  if (text.empty() || text.size() > 18 ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw NotFound("no record `" + text + "`");
  }
  return static_cast<std::size_t>(std::stoull(text));
}

}  // namespace

ReviewServer::ReviewServer(ReviewSession& session) : impl_(std::make_unique<Impl>(session)) {
  const std::string prefix(kApiPrefix);
  ReviewSession& s = impl_->session;

  impl_->http.Get(prefix + "/documents", guarded([&s](const httplib::Request&,
                                                      httplib::Response& res) {
    json docs = json::array();
    for (const auto& d : s.list()) {
      docs.push_back({{"id", d.id},
                      {"status", std::string(to_string(d.status))},
                      {"records", d.records},
                      {"decided", d.decided},
                      {"decidable", d.decidable}});
    }
    send_json(res, 200, json{{"documents", docs}});
  }));

  impl_->http.Get(prefix + "/documents/:id", guarded([&s](const httplib::Request& req,
                                                          httplib::Response& res) {
    send_json(res, 200, to_json(s.document(req.path_params.at("id"))));
  }));

  impl_->http.Post(
      prefix + "/documents/:id/records/:n/decision",
      guarded([&s](const httplib::Request& req, httplib::Response& res) {
        json body;
        try {
          body = json::parse(req.body);
        } catch (const json::exception& e) {
          throw InvalidRequest(std::string("body is not JSON: ") + e.what());
        }
        const std::string id = req.path_params.at("id");
        const std::size_t n = parse_index(req.path_params.at("n"));
        const ReviewRecord rec = s.decide(id, n, decision_from_json(body));
        const AlignedRecord gold = resolve_record(rec);
        send_json(res, 200,
                  json{{"document", id},
                       {"record", n},
                       {"decision", to_json(*rec.decision)},
                       {"resolved",
                        {{"normalized", gold.normalized},
                         {"gloss", gold.gloss},
                         {"certainty", gold.certainty},
                         {"pos", gold.pos ? std::string(to_string(*gold.pos)) : ""}}}});
      }));

  impl_->http.Get(prefix + "/documents/:id/export", guarded([&s](const httplib::Request& req,
                                                                 httplib::Response& res) {
    const std::string force = req.get_param_value("force");
    const bool forced = force == "1" || force == "true";
    res.status = 200;
    res.set_content(s.export_document(req.path_params.at("id"), forced),
                    "text/tab-separated-values; charset=utf-8");
  }));

  impl_->http.Get(prefix + "/health", [](const httplib::Request&, httplib::Response& res) {
    send_json(res, 200, json{{"ok", true}});
  });
}

ReviewServer::~ReviewServer() { stop(); }

bool ReviewServer::listen(const std::string& host, int port) {
  return impl_->http.listen(host, port);
}

int ReviewServer::bind_to_any_port(const std::string& host) {
  return impl_->http.bind_to_any_port(host);
}

bool ReviewServer::listen_after_bind() { return impl_->http.listen_after_bind(); }

void ReviewServer::wait_until_ready() const { impl_->http.wait_until_ready(); }

void ReviewServer::stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

}  // namespace fieldnorm
