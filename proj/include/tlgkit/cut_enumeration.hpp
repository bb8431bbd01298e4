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
  \file cut_enumeration.hpp
  \brief k-feasible cut enumeration with cut functions

  Each AND node receives the pairwise merges of its fanin cuts, pruned by
  leaf-set dominance and capped per node, plus its own trivial cut.  Every
  cut carries the node's function expressed over the cut leaves (in sorted
  leaf order), so downstream matching needs no resimulation.
*/

#pragma once

#include "aig.hpp"
#include "truth_table.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tlgkit
{

struct Cut
{
  std::vector<uint32_t> leaves; //!< sorted node indices
  TruthTable function;          //!< node output over the leaves

  bool is_trivial_for( uint32_t node ) const
  {
    return leaves.size() == 1 && leaves[0] == node;
  }
};

struct CutParams
{
  int cut_size = 6;  //!< maximum number of leaves (2 to 8)
  int cut_limit = 32; //!< cuts kept per node, trivial cut included
};

namespace detail
{

/*! \brief True if `small` is a (non-strict) subset of `big`; both sorted. */
inline bool leaves_subset( const std::vector<uint32_t>& small, const std::vector<uint32_t>& big )
{
  size_t i = 0;
  for ( auto v : big )
  {
    if ( i < small.size() && small[i] == v )
    {
      ++i;
    }
  }
  return i == small.size();
}

inline std::vector<uint32_t> merge_leaves( const std::vector<uint32_t>& a,
                                           const std::vector<uint32_t>& b, size_t cap )
{
  std::vector<uint32_t> out;
  out.reserve( a.size() + b.size() );
  std::set_union( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( out ) );
  if ( out.size() > cap )
  {
    out.clear();
  }
  return out;
}

/*! \brief Expands a fanin cut function onto the merged leaf set. */
inline TruthTable expand_onto( const Cut& cut, const std::vector<uint32_t>& merged )
{
  std::vector<int> var_map( cut.leaves.size() );
  for ( size_t i = 0; i < cut.leaves.size(); ++i )
  {
    const auto pos = std::lower_bound( merged.begin(), merged.end(), cut.leaves[i] );
    var_map[i] = static_cast<int>( pos - merged.begin() );
  }
  return cut.function.expand( var_map, static_cast<int>( merged.size() ) );
}

} // namespace detail

/*! \brief All cuts, indexed by AIG node. */
inline std::vector<std::vector<Cut>> enumerate_cuts( const Aig& aig, const CutParams& ps = {} )
{
  if ( ps.cut_size < 2 || ps.cut_size > TruthTable::max_vars )
  {
    throw std::invalid_argument( "cut size must be between 2 and 8" );
  }
  if ( ps.cut_limit < 2 )
  {
    throw std::invalid_argument( "cut limit must be at least 2" );
  }

  std::vector<std::vector<Cut>> cuts( aig.num_nodes() );

  // constant node: a single leafless cut
  cuts[0].push_back( Cut{ {}, TruthTable( 0 ) } );

  for ( uint32_t n = 1; n <= aig.num_pis(); ++n )
  {
    cuts[n].push_back( Cut{ { n }, TruthTable::nth_var( 1, 0 ) } );
  }

  for ( uint32_t n = aig.num_pis() + 1; n < aig.num_nodes(); ++n )
  {
    const auto f0 = aig.fanin0( n );
    const auto f1 = aig.fanin1( n );
    const auto n0 = Aig::lit_node( f0 );
    const auto n1 = Aig::lit_node( f1 );

    std::vector<Cut> merged;
    for ( const auto& c0 : cuts[n0] )
    {
      for ( const auto& c1 : cuts[n1] )
      {
        auto leaves = detail::merge_leaves( c0.leaves, c1.leaves,
                                            static_cast<size_t>( ps.cut_size ) );
        if ( leaves.empty() && !( c0.leaves.empty() && c1.leaves.empty() ) )
        {
          continue; // merge exceeded the size bound
        }
        auto t0 = detail::expand_onto( c0, leaves );
        auto t1 = detail::expand_onto( c1, leaves );
        if ( Aig::lit_complement( f0 ) )
        {
          t0 = ~t0;
        }
        if ( Aig::lit_complement( f1 ) )
        {
          t1 = ~t1;
        }
        Cut cut{ std::move( leaves ), t0 & t1 };

        // skip exact duplicates (same leaves imply the same function)
        bool duplicate = false;
        for ( const auto& seen : merged )
        {
          if ( seen.leaves == cut.leaves )
          {
            duplicate = true;
            break;
          }
        }
        if ( !duplicate )
        {
          merged.push_back( std::move( cut ) );
        }
      }
    }

    // dominance: drop any cut whose leaves contain another cut's leaves
    std::vector<bool> dominated( merged.size(), false );
    for ( size_t i = 0; i < merged.size(); ++i )
    {
      for ( size_t j = 0; j < merged.size() && !dominated[i]; ++j )
      {
        if ( i != j && !dominated[j] && merged[j].leaves.size() < merged[i].leaves.size() &&
             detail::leaves_subset( merged[j].leaves, merged[i].leaves ) )
        {
          dominated[i] = true;
        }
      }
    }
    std::vector<Cut> kept;
    for ( size_t i = 0; i < merged.size(); ++i )
    {
      if ( !dominated[i] )
      {
        kept.push_back( std::move( merged[i] ) );
      }
    }

    std::sort( kept.begin(), kept.end(), []( const Cut& a, const Cut& b ) {
      if ( a.leaves.size() != b.leaves.size() )
      {
        return a.leaves.size() < b.leaves.size();
      }
      return a.leaves < b.leaves;
    } );
    if ( kept.size() > static_cast<size_t>( ps.cut_limit ) - 1 )
    {
      kept.resize( ps.cut_limit - 1 );
    }

    // the trivial cut backs merges at the fanouts and is never dropped
    kept.push_back( Cut{ { n }, TruthTable::nth_var( 1, 0 ) } );
    cuts[n] = std::move( kept );
  }

  return cuts;
}

} // namespace tlgkit
