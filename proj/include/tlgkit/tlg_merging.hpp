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
  \file tlg_merging.hpp
  \brief Collapses single-fanout threshold gate pairs

  Wherever a gate feeds exactly one other gate and nothing else (no other
  gate, no primary output), the pair's composed function is rebuilt over the
  united input set and re-identified.  If the composition is again a
  threshold function, one gate replaces the two.  Iterating to a fixpoint
  never increases the gate count.
*/

#pragma once

#include "threshold_identification.hpp"
#include "tlg_network.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tlgkit
{

struct MergeParams
{
  int max_arity = TruthTable::max_vars; //!< united input bound for a merge
  IdentifyParams identify;
};

struct MergeStats
{
  size_t merges = 0;
  size_t gates_before = 0;
  size_t gates_after = 0;
};

namespace detail
{

/*! \brief Composed truth table of child feeding parent at `child_pos`.
 *
 * `united` lists the merged gate's inputs; `child_sel`/`parent_sel` give,
 * for each united variable, its position in the child/parent input list or
 * -1.  The parent reads the child's value at input `child_pos`.
 */
inline TruthTable compose_gates( const Tlg& parent, const Tlg& child, size_t child_pos,
                                 const std::vector<int>& child_sel,
                                 const std::vector<int>& parent_sel, int united_size )
{
  TruthTable tt( united_size );
  for ( uint32_t m = 0; m < tt.num_bits(); ++m )
  {
    int child_sum = 0;
    for ( int u = 0; u < united_size; ++u )
    {
      if ( child_sel[u] >= 0 && ( ( m >> u ) & 1u ) )
      {
        child_sum += child.inputs[child_sel[u]].weight;
      }
    }
    const bool child_val = child_sum >= child.threshold;

    int parent_sum = child_val ? parent.inputs[child_pos].weight : 0;
    for ( int u = 0; u < united_size; ++u )
    {
      if ( parent_sel[u] >= 0 && ( ( m >> u ) & 1u ) )
      {
        parent_sum += parent.inputs[parent_sel[u]].weight;
      }
    }
    tt.set_bit( m, parent_sum >= parent.threshold );
  }
  return tt;
}

} // namespace detail

/*! \brief Applies pair merges until none fits; the result is validated. */
inline TlgNetwork merge_network( const TlgNetwork& input, const MergeParams& params = {},
                                 MergeStats* stats = nullptr )
{
  TlgNetwork net = input;
  net.validate();
  if ( stats )
  {
    stats->merges = 0;
    stats->gates_before = net.num_gates();
  }

  ThresholdIdentifier identifier( params.identify );

  bool changed = true;
  while ( changed )
  {
    changed = false;

    // readers per signal: gates plus primary outputs
    std::unordered_map<std::string, int> reader_count;
    std::unordered_map<std::string, size_t> producer;
    for ( size_t i = 0; i < net.gates.size(); ++i )
    {
      producer[net.gates[i].output] = i;
      for ( const auto& in : net.gates[i].inputs )
      {
        ++reader_count[in.signal];
      }
    }
    for ( const auto& o : net.outputs )
    {
      ++reader_count[o];
    }

    for ( size_t pi = 0; pi < net.gates.size() && !changed; ++pi )
    {
      Tlg& parent = net.gates[pi];
      for ( size_t pos = 0; pos < parent.inputs.size() && !changed; ++pos )
      {
        const auto& signal = parent.inputs[pos].signal;
        const auto child_it = producer.find( signal );
        if ( child_it == producer.end() || reader_count[signal] != 1 )
        {
          continue; // not gate-driven, or read by more than this parent
        }
        const Tlg& child = net.gates[child_it->second];

        // united input list: parent order with the child spliced in place
        std::vector<TlgInput> united;
        for ( size_t i = 0; i < parent.inputs.size(); ++i )
        {
          if ( i == pos )
          {
            for ( const auto& cin : child.inputs )
            {
              united.push_back( cin );
            }
          }
          else
          {
            united.push_back( parent.inputs[i] );
          }
        }
        std::vector<TlgInput> unique;
        for ( const auto& u : united )
        {
          bool seen = false;
          for ( const auto& v : unique )
          {
            if ( v.signal == u.signal )
            {
              seen = true;
              break;
            }
          }
          if ( !seen )
          {
            unique.push_back( u );
          }
        }
        if ( static_cast<int>( unique.size() ) > params.max_arity )
        {
          continue;
        }

        std::vector<int> child_sel( unique.size(), -1 ), parent_sel( unique.size(), -1 );
        for ( size_t u = 0; u < unique.size(); ++u )
        {
          for ( size_t i = 0; i < child.inputs.size(); ++i )
          {
            if ( child.inputs[i].signal == unique[u].signal )
            {
              child_sel[u] = static_cast<int>( i );
            }
          }
          for ( size_t i = 0; i < parent.inputs.size(); ++i )
          {
            if ( i != pos && parent.inputs[i].signal == unique[u].signal )
            {
              parent_sel[u] = static_cast<int>( i );
            }
          }
        }

        const auto composed = detail::compose_gates( parent, child, pos, child_sel, parent_sel,
                                                     static_cast<int>( unique.size() ) );
        const auto tf = identifier.identify( composed );
        if ( !tf )
        {
          continue;
        }

        Tlg merged;
        merged.output = parent.output;
        merged.threshold = tf->threshold;
        for ( size_t u = 0; u < unique.size(); ++u )
        {
          if ( tf->weights[u] == 0 && !unique[u].is_key )
          {
            continue; // vacuous data input
          }
          merged.inputs.push_back( TlgInput{ unique[u].signal, tf->weights[u], unique[u].is_key } );
        }
        if ( merged.inputs.empty() )
        {
          continue; // constant composition; leave the pair alone
        }

        const size_t ci = child_it->second;
        net.gates[pi] = std::move( merged );
        net.gates.erase( net.gates.begin() + ci );
        changed = true;
        if ( stats )
        {
          ++stats->merges;
        }
      }
    }
  }

  net.validate();
  if ( stats )
  {
    stats->gates_after = net.num_gates();
  }
  return net;
}

} // namespace tlgkit
