#ifndef DOXA_DETAIL_OVERLOADED_HPP
#define DOXA_DETAIL_OVERLOADED_HPP

namespace doxa::detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace doxa::detail

#endif  // DOXA_DETAIL_OVERLOADED_HPP
