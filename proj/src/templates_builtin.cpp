#include "mfc/lbp.hpp"

namespace mfc {

// Default texture templates, trained with train_templates on synthetic
// 100x100 patches: near-flat cloud cores and low-frequency fields on the
// cloud side ("cloud-smooth"), periodic billow patterns ("cloud-billow"),
// iid speckle and fine stripe/grid textures on the non-cloud side.
// data/templates.txt carries the same values; retrain both with
//   mfc train-textures <patch-dir> --out data/templates.txt
TextureTemplateSet TextureTemplateSet::builtin() {
  TextureTemplateSet set;
  set.cloud = {
      {"cloud-billow",
       {0.056770597555454959, 0.031377320054323227, 0.11229628791308284,
        4.2440018107741062e-05, 0.2047872340425532, 0, 0, 0,
        0.042142937980986873, 0, 5.6586690810321412e-05, 0, 0,
        0.00014146672702580352, 0.059048211860570396, 0, 0.21371378451788139,
        0, 0.062330239927569031, 0, 0, 0, 0, 0, 0.0043147351742870077,
        0.0045693752829334541, 0, 0.11876131733816206, 0, 0, 0,
        7.0733363512901761e-05, 0, 2.8293345405160706e-05,
        0.032056360344047082, 0.057492077863286556}},
      {"cloud-smooth",
       {0.001428813942960616, 0.0020371208691715714, 0.0073704164780443665, 0,
        0.070874830239927605, 0, 0.00012732005432322324,
        0.00016976007243096428, 0.313716613852422, 0.00011317338162064286,
        0.00021220009053870537, 0, 8.4880036215482152e-05,
        0.00033952014486192861, 0.0010044137618832054, 4.2440018107741076e-05,
        0.10980647351742875, 0, 0.00067904028972385721, 0, 0,
        0.00011317338162064286, 4.2440018107741076e-05, 0,
        0.00076392032593933928, 0.00049513354459031255,
        9.9026708918062501e-05, 0.014387166138524221, 0, 0, 0,
        2.8293345405160716e-05, 9.9026708918062501e-05,
        0.00025464010864644648, 0.010256337709370761, 0.46545382526029894}},
  };
  set.noncloud = {
      {"noncloud-grid",
       {0.15660366681756452, 0.14527218198279765, 0.007299683114531462,
        0.018334087822544136, 0.014754979628791309, 0.022252716161158898,
        0.0031264146672702578, 0.0031264146672702578, 0.01083635129017655,
        0.063843933906745143, 0.013920325939339067, 0.0018249207786328655,
        0.0030981213218650976, 0.013014938886373926, 0.012321751923947489,
        0.0026029877772747851, 0.015872566772295156, 0.013142258940697147,
        0.012632978723404254, 0.00048098687188773202, 0.011854911724762336,
        0.0030981213218650976, 0, 0.0003395201448619285, 0.012788592123132637,
        0.012350045269352648, 0.0035932548664554097, 0.0089689904934359445,
        0.0034800814848347668, 0.0016551607062019013, 0.01162856496152105,
        0.018305794477138978, 0.02281858306926211, 0.055723743775464012,
        0.13948619284744229, 0.15954617473970123}},
      {"noncloud-speckle",
       {0.14293798098687191, 0.11047136713445001, 0.026029877772747855,
        0.031264146672702588, 0.013439339067451339, 0.027119171570846548,
        0.012986645540968768, 0.013750565866908107, 0.011034404708012677,
        0.015943300135808063, 0.013778859212313269, 0.014839859665006795,
        0.011105138071525579, 0.013495925758261659, 0.010892937980986875,
        0.01114757808963332, 0.0127461521050249, 0.013948619284744232,
        0.011388071525577187, 0.011303191489361703, 0.011147578089633322,
        0.013057378904481673, 0.0050645088275237671, 0.010751471253961069,
        0.014118379357175196, 0.013736419194205528, 0.013566659121774561,
        0.025987437754640116, 0.0031688546853779996, 0.014995473064735178,
        0.014288139429606163, 0.030160706201901321, 0.027656745133544599,
        0.01594330013580806, 0.11106552738795838, 0.14566828881846991}},
  };
  return set;
}

}  // namespace mfc
