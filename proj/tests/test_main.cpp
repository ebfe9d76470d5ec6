#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <string>
#include <string_view>

std::string g_cli_path;

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg.rfind("--cli-path=", 0) == 0) {
      g_cli_path = arg.substr(std::string_view("--cli-path=").size());
    }
  }
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
