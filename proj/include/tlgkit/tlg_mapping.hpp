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
  \file tlg_mapping.hpp
  \brief Covers an and-inverter graph with threshold gates

  Every AND node picks, among its cuts whose function has a threshold
  realization, the one minimizing first arrival level and then area flow.
  The two-leaf fanin cut of a node is always realizable (a conjunction of
  possibly complemented literals), so covering never fails.  A complemented
  use is absorbed by negating weights: if f has weights w and threshold T,
  then NOT f has weights -w and threshold 1 - T.
*/

#pragma once

#include "aig.hpp"
#include "cut_enumeration.hpp"
#include "threshold_identification.hpp"
#include "tlg_network.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tlgkit
{

struct MapParams
{
  CutParams cuts;
  IdentifyParams identify;
};

struct MapStats
{
  size_t num_gates = 0;
  int depth = 0;
  size_t num_candidate_cuts = 0; //!< cuts offered to the matcher
  size_t num_threshold_cuts = 0; //!< cuts that had a realization
};

namespace detail
{

/*! \brief Gate computing NOT source: fires exactly when the source is 0. */
inline Tlg make_inverter( const std::string& output, const std::string& source )
{
  return Tlg{ output, { { source, -1, false } }, 0, 0 };
}

inline Tlg make_buffer( const std::string& output, const std::string& source )
{
  return Tlg{ output, { { source, 1, false } }, 1, 0 };
}

/*! \brief Constant gate realized over an arbitrary existing signal. */
inline Tlg make_constant( const std::string& output, const std::string& any_signal, bool value )
{
  // sum is 0 or 1; threshold 2 never fires, threshold 0 always does
  return Tlg{ output, { { any_signal, 1, false } }, value ? 0 : 2, 0 };
}

} // namespace detail

/*! \brief Maps an AIG to an equivalent threshold gate network. */
inline TlgNetwork map_to_tlg( const Aig& aig, const MapParams& params = {},
                              MapStats* stats = nullptr )
{
  const auto cuts = enumerate_cuts( aig, params.cuts );
  ThresholdIdentifier identifier( params.identify );

  struct Choice
  {
    const Cut* cut = nullptr;
    ThresholdFunction tf;
    int level = 0;
    double area_flow = 0.0;
  };

  const auto refs = aig.fanout_counts();
  std::vector<Choice> choice( aig.num_nodes() );
  size_t candidate_cuts = 0, threshold_cuts = 0;

  for ( uint32_t n = aig.num_pis() + 1; n < aig.num_nodes(); ++n )
  {
    Choice best;
    best.level = std::numeric_limits<int>::max();
    best.area_flow = std::numeric_limits<double>::max();
    for ( const auto& cut : cuts[n] )
    {
      if ( cut.is_trivial_for( n ) )
      {
        continue;
      }
      ++candidate_cuts;
      const auto tf = identifier.identify( cut.function );
      if ( !tf )
      {
        continue;
      }
      ++threshold_cuts;
      int level = 0;
      double flow = 1.0;
      for ( auto leaf : cut.leaves )
      {
        level = std::max( level, choice[leaf].level );
        flow += choice[leaf].area_flow / std::max( 1, refs[leaf] );
      }
      ++level;
      if ( level < best.level ||
           ( level == best.level && flow < best.area_flow ) )
      {
        best.cut = &cut;
        best.tf = *tf;
        best.level = level;
        best.area_flow = flow;
      }
    }
    // the fanin cut guarantees a match; not finding one is a logic error
    if ( best.cut == nullptr )
    {
      throw std::logic_error( "no threshold-realizable cut for a node" );
    }
    choice[n] = best;
  }

  // collect the nodes actually needed under the chosen cover
  std::vector<bool> required( aig.num_nodes(), false );
  std::vector<uint32_t> work;
  for ( auto l : aig.output_lits() )
  {
    const auto node = Aig::lit_node( l );
    if ( aig.is_and( node ) && !required[node] )
    {
      required[node] = true;
      work.push_back( node );
    }
  }
  while ( !work.empty() )
  {
    const auto n = work.back();
    work.pop_back();
    const auto& ch = choice[n];
    for ( size_t i = 0; i < ch.cut->leaves.size(); ++i )
    {
      const auto leaf = ch.cut->leaves[i];
      if ( ch.tf.weights[i] == 0 )
      {
        continue; // vacuous leaves are not read by the emitted gate
      }
      if ( aig.is_and( leaf ) && !required[leaf] )
      {
        required[leaf] = true;
        work.push_back( leaf );
      }
    }
  }

  TlgNetwork net;
  net.name = "top";
  std::unordered_set<std::string> taken;
  for ( const auto& in : aig.input_names() )
  {
    net.add_input( in );
    taken.insert( in );
  }
  for ( const auto& out : aig.output_names() )
  {
    net.add_output( out );
    taken.insert( out );
  }
  auto fresh = [&taken]( std::string base ) {
    while ( taken.count( base ) )
    {
      base += "_";
    }
    taken.insert( base );
    return base;
  };

  // reader counts under the cover decide whether an output inversion can be
  // folded into the driving gate instead of costing a separate inverter
  std::vector<int> readers( aig.num_nodes(), 0 );
  for ( uint32_t n = aig.num_pis() + 1; n < aig.num_nodes(); ++n )
  {
    if ( !required[n] )
    {
      continue;
    }
    const auto& ch = choice[n];
    for ( size_t i = 0; i < ch.cut->leaves.size(); ++i )
    {
      if ( ch.tf.weights[i] != 0 && aig.is_and( ch.cut->leaves[i] ) )
      {
        ++readers[ch.cut->leaves[i]];
      }
    }
  }
  for ( auto l : aig.output_lits() )
  {
    if ( aig.is_and( Aig::lit_node( l ) ) )
    {
      ++readers[Aig::lit_node( l )];
    }
  }

  // a node may borrow the name of the first output it drives uncomplemented;
  // an inverted output claims its node outright when nothing else reads it,
  // negating the gate in place as (-w, 1 - T)
  std::vector<std::string> node_name( aig.num_nodes() );
  std::vector<bool> node_negated( aig.num_nodes(), false );
  for ( size_t o = 0; o < aig.output_lits().size(); ++o )
  {
    const auto l = aig.output_lits()[o];
    const auto node = Aig::lit_node( l );
    if ( aig.is_and( node ) && !Aig::lit_complement( l ) && node_name[node].empty() )
    {
      node_name[node] = aig.output_names()[o];
    }
  }
  for ( size_t o = 0; o < aig.output_lits().size(); ++o )
  {
    const auto l = aig.output_lits()[o];
    const auto node = Aig::lit_node( l );
    if ( aig.is_and( node ) && Aig::lit_complement( l ) && node_name[node].empty() &&
         readers[node] == 1 )
    {
      node_name[node] = aig.output_names()[o];
      node_negated[node] = true;
    }
  }
  for ( uint32_t n = 1; n < aig.num_nodes(); ++n )
  {
    if ( aig.is_pi( n ) )
    {
      node_name[n] = aig.input_names()[aig.pi_index( n )];
    }
    else if ( required[n] && node_name[n].empty() )
    {
      node_name[n] = fresh( "n" + std::to_string( n ) );
    }
  }

  // emit gates in node order, which is topological by construction
  for ( uint32_t n = aig.num_pis() + 1; n < aig.num_nodes(); ++n )
  {
    if ( !required[n] )
    {
      continue;
    }
    const auto& ch = choice[n];
    const bool neg = node_negated[n];
    Tlg gate;
    gate.output = node_name[n];
    gate.threshold = neg ? 1 - ch.tf.threshold : ch.tf.threshold;
    for ( size_t i = 0; i < ch.cut->leaves.size(); ++i )
    {
      if ( ch.tf.weights[i] == 0 )
      {
        continue; // input outside the function's support
      }
      const int w = neg ? -ch.tf.weights[i] : ch.tf.weights[i];
      gate.inputs.push_back( TlgInput{ node_name[ch.cut->leaves[i]], w, false } );
    }
    if ( gate.inputs.empty() )
    {
      // a redundant cone can hand the cut a constant function
      if ( net.inputs.empty() )
      {
        throw std::logic_error( "cannot realize a constant without inputs" );
      }
      gate = detail::make_constant( gate.output, net.inputs.front(), gate.threshold <= 0 );
    }
    net.add_gate( std::move( gate ) );
  }

  // outputs that are not plainly a mapped node need glue gates
  for ( size_t o = 0; o < aig.output_lits().size(); ++o )
  {
    const auto l = aig.output_lits()[o];
    const auto& out_name = aig.output_names()[o];
    const auto node = Aig::lit_node( l );

    if ( l == Aig::const0 || l == Aig::const1 )
    {
      if ( net.inputs.empty() )
      {
        throw std::logic_error( "cannot realize a constant output without inputs" );
      }
      net.add_gate( detail::make_constant( out_name, net.inputs.front(), l == Aig::const1 ) );
      continue;
    }
    if ( !Aig::lit_complement( l ) && node_name[node] == out_name )
    {
      continue; // the gate (or the input itself) already carries this name
    }
    if ( Aig::lit_complement( l ) && aig.is_and( node ) && node_negated[node] &&
         node_name[node] == out_name )
    {
      continue; // the inversion was folded into the gate itself
    }
    if ( Aig::lit_complement( l ) )
    {
      net.add_gate( detail::make_inverter( out_name, node_name[node] ) );
    }
    else
    {
      net.add_gate( detail::make_buffer( out_name, node_name[node] ) );
    }
  }

  net.validate();
  if ( stats )
  {
    stats->num_gates = net.num_gates();
    stats->depth = net.depth();
    stats->num_candidate_cuts = candidate_cuts;
    stats->num_threshold_cuts = threshold_cuts;
  }
  return net;
}

/*! \brief Full front end: primitive gates to threshold gates. */
inline TlgNetwork map_to_tlg( const BoolCircuit& circ, const MapParams& params = {},
                              MapStats* stats = nullptr )
{
  auto net = map_to_tlg( to_aig( circ ), params, stats );
  net.name = circ.name;
  return net;
}

} // namespace tlgkit
