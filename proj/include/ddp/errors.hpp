#ifndef DDP_ERRORS_HPP
#define DDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ddp {

struct GraphDisconnected : std::runtime_error {
    explicit GraphDisconnected(const std::string& what = "graph is disconnected")
        : std::runtime_error(what) {}
};

struct NotBipartite : std::runtime_error {
    explicit NotBipartite(const std::string& what = "graph is not bipartite")
        : std::runtime_error(what) {}
};

struct NotATree : std::runtime_error {
    explicit NotATree(const std::string& what = "graph is not a tree")
        : std::runtime_error(what) {}
};

struct OrderTooLarge : std::runtime_error {
    explicit OrderTooLarge(const std::string& what = "graph order exceeds cap")
        : std::runtime_error(what) {}
};

struct OrderTooSmall : std::runtime_error {
    explicit OrderTooSmall(const std::string& what = "graph order too small")
        : std::runtime_error(what) {}
};

struct ParameterOutOfRange : std::invalid_argument {
    explicit ParameterOutOfRange(const std::string& what = "parameter out of range")
        : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
    int line;
    int offset;
    ParseError(const std::string& what, int line_ = -1, int offset_ = -1)
        : std::runtime_error(what), line(line_), offset(offset_) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ddp

#endif
