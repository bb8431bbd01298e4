/* tlgkit: C++ threshold logic synthesis and locking toolkit
 * Copyright (C) 2025-2026  the tlgkit authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file cnf_encoding.hpp
  \brief CNF encodings of threshold gates, networks, and miters

  A threshold gate is a pseudo-Boolean constraint, so it is translated
  into clauses through a decision diagram over partial sums: node
  `(i, s)` stands for "the inputs from position i onward can still
  raise the accumulated sum s to the threshold".  A node whose
  remaining inputs cannot change the verdict collapses to a constant,
  which keeps the diagram polynomial in the sum of absolute weights,
  and every interior node becomes one fresh variable defined by an
  if-then-else on the current input.  Negative weights need no special
  treatment: they only shift the reachable sum interval.

  On top of the gate encoder sit whole-network and gate-level circuit
  encoders with namespaced signal variables, and a miter constructor
  that ties two copies of a locked network together for key-recovery
  queries.
*/

#pragma once

#include "bool_circuit.hpp"
#include "cnf.hpp"
#include "locking.hpp"
#include "tlg_network.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tlgkit
{

namespace detail
{

/*! \brief Sentinel literal for a node that is constantly true. */
inline constexpr int lit_const_true = std::numeric_limits<int>::max();
/*! \brief Sentinel literal for a node that is constantly false. */
inline constexpr int lit_const_false = -std::numeric_limits<int>::max();

/*! \brief Adds clauses for `d == (a xor b)`; any argument may be negated. */
inline void add_xor_clauses( CnfFormula& f, int d, int a, int b )
{
  f.add_clause( { -d, a, b } );
  f.add_clause( { -d, -a, -b } );
  f.add_clause( { d, -a, b } );
  f.add_clause( { d, a, -b } );
}

inline std::string prefixed( const std::string& prefix, const std::string& signal )
{
  return prefix.empty() ? signal : prefix + "/" + signal;
}

} // namespace detail

/*! \brief Translates one threshold gate into clauses of `f`.
 *
 * `varmap` must map every input signal and the output signal of the
 * gate to a CNF variable.  The added clauses are satisfiability-exact:
 * for each assignment of the mapped variables, the auxiliary diagram
 * variables extend it in exactly one way, and the output variable is
 * forced to the gate's value on those inputs.
 */
inline void encode_tlg( const Tlg& gate, CnfFormula& f,
                        const std::unordered_map<std::string, int>& varmap )
{
  if ( gate.inputs.size() > 30u )
  {
    throw std::invalid_argument( "gate '" + gate.output + "' has " +
                                 std::to_string( gate.inputs.size() ) +
                                 " inputs; the CNF encoder accepts at most 30" );
  }
  const int n = static_cast<int>( gate.inputs.size() );
  const long long threshold = gate.threshold;

  // rem_pos[i] / rem_neg[i]: largest / smallest sum inputs i.. can still add
  std::vector<long long> rem_pos( n + 1, 0 ), rem_neg( n + 1, 0 );
  for ( int i = n - 1; i >= 0; --i )
  {
    const long long w = gate.inputs[i].weight;
    rem_pos[i] = rem_pos[i + 1] + std::max( w, 0LL );
    rem_neg[i] = rem_neg[i + 1] + std::min( w, 0LL );
  }

  std::map<std::pair<int, long long>, int> memo;
  const auto node = [&]( const auto& self, int i, long long s ) -> int {
    if ( s >= threshold - rem_neg[i] )
    {
      return detail::lit_const_true; // even the worst completion reaches the threshold
    }
    if ( s < threshold - rem_pos[i] )
    {
      return detail::lit_const_false; // even the best completion falls short
    }
    // both guards decide at i == n, so here i < n
    const auto key = std::make_pair( i, s );
    if ( const auto it = memo.find( key ); it != memo.end() )
    {
      return it->second;
    }
    const int x = varmap.at( gate.inputs[i].signal );
    const int hi = self( self, i + 1, s + gate.inputs[i].weight );
    const int lo = self( self, i + 1, s );
    int lit;
    if ( hi == lo )
    {
      lit = hi; // the input cannot influence the verdict here
    }
    else if ( hi == detail::lit_const_true && lo == detail::lit_const_false )
    {
      lit = x;
    }
    else if ( hi == detail::lit_const_false && lo == detail::lit_const_true )
    {
      lit = -x;
    }
    else
    {
      const int d = f.new_var();
      if ( hi == detail::lit_const_true )
      { // d == (x or lo)
        f.add_clause( { d, -x } );
        f.add_clause( { d, -lo } );
        f.add_clause( { -d, x, lo } );
      }
      else if ( hi == detail::lit_const_false )
      { // d == (not x and lo)
        f.add_clause( { -d, -x } );
        f.add_clause( { -d, lo } );
        f.add_clause( { d, x, -lo } );
      }
      else if ( lo == detail::lit_const_true )
      { // d == (not x or hi)
        f.add_clause( { d, x } );
        f.add_clause( { d, -hi } );
        f.add_clause( { -d, -x, hi } );
      }
      else if ( lo == detail::lit_const_false )
      { // d == (x and hi)
        f.add_clause( { -d, x } );
        f.add_clause( { -d, hi } );
        f.add_clause( { d, -x, -hi } );
      }
      else
      { // d == (x ? hi : lo)
        f.add_clause( { -d, -x, hi } );
        f.add_clause( { d, -x, -hi } );
        f.add_clause( { -d, x, lo } );
        f.add_clause( { d, x, -lo } );
      }
      lit = d;
    }
    memo.emplace( key, lit );
    return lit;
  };

  const int root = node( node, 0, 0 );
  const int y = varmap.at( gate.output );
  if ( root == detail::lit_const_true )
  {
    f.add_clause( { y } );
  }
  else if ( root == detail::lit_const_false )
  {
    f.add_clause( { -y } );
  }
  else
  {
    f.add_clause( { -y, root } );
    f.add_clause( { y, -root } );
  }
}

/*! \brief Encodes every gate of a threshold network into `f`.
 *
 * Signals are entered into the formula's variable map under namespaced
 * names: primary inputs keep their plain name while `share_inputs`
 * holds (so several copies of a network meet on the same input
 * variables), key inputs live under `key_copy`, and everything else
 * under `copy`.  The returned map goes from plain signal names to the
 * variables of this particular copy.
 */
inline std::unordered_map<std::string, int>
encode_network( const TlgNetwork& net, CnfFormula& f, const std::string& copy = "",
                const std::string& key_copy = "", bool share_inputs = true )
{
  std::unordered_map<std::string, int> vars;
  vars.reserve( net.inputs.size() + net.key_inputs.size() + net.gates.size() );
  for ( const auto& in : net.inputs )
  {
    vars[in] = f.var( share_inputs ? in : detail::prefixed( copy, in ) );
  }
  for ( const auto& k : net.key_inputs )
  {
    vars[k] = f.var( detail::prefixed( key_copy, k ) );
  }
  for ( const auto& g : net.gates )
  {
    vars[g.output] = f.var( detail::prefixed( copy, g.output ) );
  }
  for ( const auto& g : net.gates )
  {
    encode_tlg( g, f, vars );
  }
  return vars;
}

/*! \brief Encodes a gate-level circuit into `f`; see encode_network for naming. */
inline std::unordered_map<std::string, int>
encode_circuit( const BoolCircuit& circ, CnfFormula& f, const std::string& copy = "",
                bool share_inputs = true )
{
  std::unordered_map<std::string, int> vars;
  vars.reserve( circ.inputs.size() + circ.gates.size() );
  for ( const auto& in : circ.inputs )
  {
    vars[in] = f.var( share_inputs ? in : detail::prefixed( copy, in ) );
  }
  for ( const auto& g : circ.gates )
  {
    vars[g.output] = f.var( detail::prefixed( copy, g.output ) );
  }
  for ( const auto& g : circ.gates )
  {
    const int y = vars.at( g.output );
    std::vector<int> fan;
    fan.reserve( g.fanins.size() );
    for ( const auto& s : g.fanins )
    {
      fan.push_back( vars.at( s ) );
    }
    switch ( g.kind )
    {
    case GateKind::And:
    case GateKind::Nand:
    {
      const int out = g.kind == GateKind::And ? y : -y;
      std::vector<int> all{ out };
      for ( const int x : fan )
      {
        f.add_clause( { -out, x } );
        all.push_back( -x );
      }
      f.add_clause( all );
      break;
    }
    case GateKind::Or:
    case GateKind::Nor:
    {
      const int out = g.kind == GateKind::Or ? y : -y;
      std::vector<int> all{ -out };
      for ( const int x : fan )
      {
        f.add_clause( { out, -x } );
        all.push_back( x );
      }
      f.add_clause( all );
      break;
    }
    case GateKind::Xor:
    case GateKind::Xnor:
    {
      int acc = fan[0];
      for ( size_t i = 1; i + 1 < fan.size(); ++i )
      {
        const int t = f.new_var();
        detail::add_xor_clauses( f, t, acc, fan[i] );
        acc = t;
      }
      detail::add_xor_clauses( f, g.kind == GateKind::Xor ? y : -y, acc, fan.back() );
      break;
    }
    case GateKind::Not:
      f.add_clause( { y, fan[0] } );
      f.add_clause( { -y, -fan[0] } );
      break;
    case GateKind::Buf:
      f.add_clause( { y, -fan[0] } );
      f.add_clause( { -y, fan[0] } );
      break;
    }
  }
  return vars;
}

/*! \brief Builds the two-copy difference formula for a locked network.
 *
 * The copies read the same primary inputs but carry independent key
 * variables, and the formula asserts that at least one output pair
 * disagrees.  A model therefore witnesses two key hypotheses that an
 * input pattern tells apart.  Variable naming inside the result:
 * inputs keep their plain signal name, the copies use `a/<signal>` and
 * `b/<signal>` (key inputs included), and each output has a difference
 * flag `diff/<output>`.
 */
inline CnfFormula build_miter( const LockedNetwork& locked )
{
  if ( locked.network.key_inputs.empty() )
  {
    throw std::invalid_argument( "cannot build a miter for a network without key inputs" );
  }
  CnfFormula f;
  const auto va = encode_network( locked.network, f, "a", "a" );
  const auto vb = encode_network( locked.network, f, "b", "b" );
  std::vector<int> diffs;
  diffs.reserve( locked.network.outputs.size() );
  for ( const auto& out : locked.network.outputs )
  {
    const int d = f.var( detail::prefixed( "diff", out ) );
    f.add_clause( { -d, va.at( out ), vb.at( out ) } );
    f.add_clause( { -d, -va.at( out ), -vb.at( out ) } );
    diffs.push_back( d );
  }
  f.add_clause( diffs );
  return f;
}

} // namespace tlgkit
